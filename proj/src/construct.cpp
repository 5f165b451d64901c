#include "labelkit/construct.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "labelkit/canonical.hpp"

namespace labelkit {

namespace {

void mustHold(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("construction self-check failed: ") + what);
}

void requireKind(const Graph& g, const Labeling& phi, LabelingKind kind, const char* what) {
    if (!checkLabeling(g, phi, kind).ok) throw std::invalid_argument(what);
}

void selfCheck(const Graph& g, const Labeling& phi, LabelingKind kind, const char* what) {
    mustHold(checkLabeling(g, phi, kind).ok, what);
}

int nodeWithLabel(const Labeling& phi, int label) {
    for (size_t v = 0; v < phi.size(); ++v)
        if (phi[v] == label) return static_cast<int>(v);
    return -1;
}

// boundary of an alpha labeling: the largest lower endpoint over all edges
int alphaBoundary(const Graph& g, const Labeling& phi) {
    int k = 0;
    for (auto [u, v] : g.edges()) k = std::max(k, std::min(phi[u], phi[v]));
    return k;
}

void checkInjectionPreserved(const Graph& guest, const EmbeddingResult& emb) {
    mustHold(emb.injection.size() == static_cast<size_t>(guest.order()), "injection covers guest");
    std::set<int> image(emb.injection.begin(), emb.injection.end());
    mustHold(image.size() == emb.injection.size(), "injection is injective");
    for (auto [u, v] : guest.edges())
        mustHold(emb.host.adjacent(emb.injection[u], emb.injection[v]), "injection preserves edges");
    if (emb.induced) {
        for (int u = 0; u < guest.order(); ++u)
            for (int v = u + 1; v < guest.order(); ++v)
                if (!guest.adjacent(u, v))
                    mustHold(!emb.host.adjacent(emb.injection[u], emb.injection[v]),
                             "induced embedding preserves non-edges");
    }
}

}  // namespace

LabeledGraph generalExtend(const Graph& g, const Labeling& graceful, const AttachmentSpec& spec) {
    requireKind(g, graceful, LabelingKind::graceful(), "generalExtend: input labeling not graceful");
    if (spec.increments.empty() && spec.components.empty() && spec.type1.empty())
        return {g, graceful};  // empty spec: the graph itself

    Labeling phi = graceful;
    for (auto [node, c] : spec.increments) {
        if (c <= 0) throw std::invalid_argument("generalExtend: increments must be positive");
        if (node < 0 || node >= g.order()) throw std::invalid_argument("generalExtend: node range");
        phi[node] += c;
    }
    if (!checkLabeling(g, phi, LabelingKind::edgeDistinct()).ok)
        throw std::invalid_argument("generalExtend: increments collide node or edge labels");

    auto prof = profile(g, phi);
    std::set<int> missing(prof.missingEdgeLabels.begin(), prof.missingEdgeLabels.end());
    std::set<int> coveredOnce;
    auto cover = [&](int e) {
        if (!missing.count(e))
            throw std::invalid_argument("generalExtend: label " + std::to_string(e) +
                                        " is not a missing edge label");
        if (!coveredOnce.insert(e).second)
            throw std::invalid_argument("generalExtend: label " + std::to_string(e) +
                                        " realized more than once");
    };

    Graph h = g;
    Labeling lab = phi;
    for (auto& [e, pair] : spec.type1) {
        auto [u, v] = pair;
        if (h.adjacent(u, v)) throw std::invalid_argument("generalExtend: type-1 pair already an edge");
        if (std::abs(phi[u] - phi[v]) != e)
            throw std::invalid_argument("generalExtend: type-1 pair does not realize its label");
        cover(e);
        h = h.plusEdge(u, v);
    }
    // components coalesce at their unique label shared with the host
    std::vector<std::set<int>> componentLabelSets;
    for (auto& comp : spec.components) {
        if (comp.labels.size() != static_cast<size_t>(comp.graph.order()))
            throw std::invalid_argument("generalExtend: component labeling incomplete");
        std::set<int> mine(comp.labels.begin(), comp.labels.end());
        for (auto& other : componentLabelSets) {
            std::vector<int> inter;
            std::set_intersection(mine.begin(), mine.end(), other.begin(), other.end(),
                                  std::back_inserter(inter));
            if (inter.size() > 1)
                throw std::invalid_argument("generalExtend: components overlap in more than one label");
        }
        componentLabelSets.push_back(mine);
        std::vector<int> shared;
        for (int x : mine)
            if (nodeWithLabel(phi, x) >= 0) shared.push_back(x);
        if (shared.size() != 1)
            throw std::invalid_argument("generalExtend: component must meet the host in exactly one label");
        int sharedLabel = shared[0];
        int hostNode = nodeWithLabel(lab, sharedLabel);
        int compNode = nodeWithLabel(comp.labels, sharedLabel);
        for (auto [a, b] : comp.graph.edges()) cover(std::abs(comp.labels[a] - comp.labels[b]));
        int before = h.order();
        h = coalesce(h, hostNode, comp.graph, compNode);
        // labels of the appended component nodes, in coalesce's order
        for (int x = 0; x < comp.graph.order(); ++x)
            if (x != compNode) lab.push_back(comp.labels[x]);
        mustHold(h.order() == before + comp.graph.order() - 1, "coalesce arity");
    }
    if (coveredOnce.size() != missing.size())
        throw std::invalid_argument("generalExtend: some missing edge label was never realized");
    selfCheck(h, lab, LabelingKind::graceful(), "generalExtend output graceful");
    return {h, lab};
}

std::vector<LabeledGraph> generalExtendSearch(const Graph& g, const Labeling& graceful,
                                              const ExtendSearchBounds& bounds) {
    requireKind(g, graceful, LabelingKind::graceful(), "generalExtendSearch: input not graceful");
    std::vector<LabeledGraph> out;
    for (int node = 0; node < g.order() && out.size() < bounds.maxOutputs; ++node) {
        for (int c = 1; c <= bounds.maxIncrement && out.size() < bounds.maxOutputs; ++c) {
            Labeling phi = graceful;
            phi[node] += c;
            if (!checkLabeling(g, phi, LabelingKind::edgeDistinct()).ok) continue;
            auto prof = profile(g, phi);
            // candidate closures per missing label: non-edge insertions first,
            // single new pendants as the type-2 fallback
            struct Closure {
                bool pendant;
                std::pair<int, int> pair;  // nodes, or (host node, new label)
            };
            std::vector<std::vector<Closure>> options;
            bool feasible = true;
            std::set<int> nodeLabels(phi.begin(), phi.end());
            for (int e : prof.missingEdgeLabels) {
                std::vector<Closure> opts;
                for (auto pr : prof.rSets.at(e)) opts.push_back({false, pr});
                if (opts.empty()) {
                    for (int v = 0; v < g.order(); ++v)
                        for (int nl : {phi[v] - e, phi[v] + e}) {
                            if (nl < 0 || nl > prof.q0 || nodeLabels.count(nl)) continue;
                            opts.push_back({true, {v, nl}});
                        }
                }
                if (opts.empty()) feasible = false;
                options.push_back(std::move(opts));
            }
            if (!feasible) continue;
            std::vector<size_t> pick(options.size(), 0);
            while (out.size() < bounds.maxOutputs) {
                Graph h = g;
                Labeling lab = phi;
                bool ok = true;
                std::set<int> newLabels;
                for (size_t i = 0; i < options.size() && ok; ++i) {
                    const Closure& cl = options[i][pick[i]];
                    if (!cl.pendant) {
                        if (h.adjacent(cl.pair.first, cl.pair.second)) ok = false;
                        else h = h.plusEdge(cl.pair.first, cl.pair.second);
                    } else {
                        if (newLabels.count(cl.pair.second)) ok = false;
                        else {
                            newLabels.insert(cl.pair.second);
                            h = h.plusVertex({cl.pair.first});
                            lab.push_back(cl.pair.second);
                        }
                    }
                }
                if (ok && checkLabeling(h, lab, LabelingKind::graceful()).ok)
                    out.push_back({h, lab});
                size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < options[i].size()) break;
                    pick[i] = 0;
                }
                if (i == pick.size()) break;
                if (options.empty()) break;
            }
        }
    }
    for (auto& lg : out)
        selfCheck(lg.graph, lg.labeling, LabelingKind::graceful(), "generalExtendSearch output");
    return out;
}

LabeledGraph shiftedAlphaExtend(const Graph& g, const Labeling& alpha, int c,
                                AlphaExtendVariant variant,
                                const std::optional<LabeledGraph>& tree) {
    requireKind(g, alpha, LabelingKind::alpha(), "shiftedAlphaExtend: input labeling not alpha");
    if (c < 0) throw std::invalid_argument("shiftedAlphaExtend: c >= 0");
    if (c == 0) return {g, alpha};
    int k = alphaBoundary(g, alpha);
    std::vector<int> upper;
    for (int v = 0; v < g.order(); ++v)
        if (alpha[v] > k) upper.push_back(v);
    Labeling phi = shiftSubset(alpha, upper, c);  // vacates edge labels 1..c

    if (variant == AlphaExtendVariant::CloseWithApexEdges) {
        int aSide = 0;
        for (int v = 0; v < g.order(); ++v)
            if (alpha[v] <= k) ++aSide;
        if (c >= aSide) throw std::invalid_argument("shiftedAlphaExtend: needs c < |A|");
        int zero = nodeWithLabel(phi, 0);
        Graph h = g;
        for (int j = 1; j <= c; ++j) {
            int jn = nodeWithLabel(phi, j);
            if (zero < 0 || jn < 0)
                throw std::invalid_argument("shiftedAlphaExtend: lower-side label missing");
            h = h.plusEdge(zero, jn);
        }
        selfCheck(h, phi, LabelingKind::graceful(), "shiftedAlphaExtend apex-edge output");
        return {h, phi};
    }
    // coalesce a gracefully labeled tree of order c+1 shifted by c+1
    if (!tree) throw std::invalid_argument("shiftedAlphaExtend: tree variant needs a labeled tree");
    const Graph& t = tree->graph;
    if (t.order() != c + 1 || t.size() != c)
        throw std::invalid_argument("shiftedAlphaExtend: tree must have order c+1");
    requireKind(t, tree->labeling, LabelingKind::graceful(), "shiftedAlphaExtend: tree not graceful");
    Labeling mu = tree->labeling;
    for (int& x : mu) x += c + 1;
    std::set<int> hostLabels(phi.begin(), phi.end());
    std::vector<int> shared;
    for (int x : mu)
        if (hostLabels.count(x)) shared.push_back(x);
    if (shared.size() != 1)
        throw std::invalid_argument("shiftedAlphaExtend: shifted tree must share exactly one label");
    int hostNode = nodeWithLabel(phi, shared[0]);
    int treeNode = nodeWithLabel(mu, shared[0]);
    Graph h = coalesce(g, hostNode, t, treeNode);
    Labeling lab = phi;
    for (int x = 0; x < t.order(); ++x)
        if (x != treeNode) lab.push_back(mu[x]);
    selfCheck(h, lab, LabelingKind::graceful(), "shiftedAlphaExtend coalesce output");
    return {h, lab};
}

namespace {

// shared driver: bump the (p-1)-node by c, then close every vacated label
std::vector<LabeledGraph> bumpAndClose(const Graph& tree, const Labeling& graceful, int c,
                                       size_t maxOutputs, bool unicyclicOnly) {
    auto cls = classify(tree);
    if (!cls.tree) throw std::invalid_argument("bump construction: input must be a tree");
    requireKind(tree, graceful, LabelingKind::graceful(), "bump construction: labeling not graceful");
    int p = tree.order();
    if (c < 0 || c > p - 2) throw std::invalid_argument("bump construction: 0 <= c <= p-2");
    if (c == 0) return {{tree, graceful}};
    int u = nodeWithLabel(graceful, 0), v = nodeWithLabel(graceful, p - 1);
    mustHold(tree.adjacent(u, v), "0-node and (p-1)-node adjacent in a graceful tree");
    if (unicyclicOnly) {
        bool other = false;
        for (int w : tree.neighbors(v))
            if (w != u) other = true;
        if (!other)
            throw std::invalid_argument("unicyclicFromTree: the top node's only neighbor is the 0-node");
    }
    Labeling phi = graceful;
    phi[v] += c;
    if (!checkLabeling(tree, phi, LabelingKind::edgeDistinct()).ok)
        throw std::invalid_argument("bump construction: the bump collides edge labels");
    auto prof = profile(tree, phi);
    mustHold(static_cast<int>(prof.missingEdgeLabels.size()) == c, "bump vacates exactly c labels");
    std::vector<std::vector<std::pair<int, int>>> options;
    for (int e : prof.missingEdgeLabels) {
        auto& pairs = prof.rSets.at(e);
        if (pairs.empty())
            throw std::invalid_argument("bump construction: vacated label " + std::to_string(e) +
                                        " has an empty realizer set");
        options.push_back(pairs);
    }
    std::vector<LabeledGraph> out;
    std::vector<size_t> pick(options.size(), 0);
    while (out.size() < maxOutputs) {
        Graph h = tree;
        for (size_t i = 0; i < options.size(); ++i)
            h = h.plusEdge(options[i][pick[i]].first, options[i][pick[i]].second);
        selfCheck(h, phi, LabelingKind::graceful(), "bump construction output graceful");
        if (unicyclicOnly) {
            mustHold(h.size() == h.order(), "unicyclic output has p edges");
            mustHold(h.connected(), "unicyclic output connected");
        }
        out.push_back({h, phi});
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < options[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

}  // namespace

std::vector<LabeledGraph> bumpTopAndComplete(const Graph& tree, const Labeling& graceful, int c,
                                             size_t maxOutputs) {
    return bumpAndClose(tree, graceful, c, maxOutputs, false);
}

std::vector<LabeledGraph> unicyclicFromTree(const Graph& tree, const Labeling& graceful) {
    return bumpAndClose(tree, graceful, 1, 4096, true);
}

AlphaUnicyclicResult alphaUnicyclic(const Graph& tree, const Labeling& alpha,
                                    AlphaUnicyclicVariant variant) {
    auto cls = classify(tree);
    if (!cls.tree) throw std::invalid_argument("alphaUnicyclic: input must be a tree");
    requireKind(tree, alpha, LabelingKind::alpha(), "alphaUnicyclic: labeling not alpha");
    int k = alphaBoundary(tree, alpha);
    std::vector<int> upper;
    for (int v = 0; v < tree.order(); ++v)
        if (alpha[v] > k) upper.push_back(v);
    Labeling phi;
    if (variant == AlphaUnicyclicVariant::ShiftAllB) {
        phi = shiftSubset(alpha, upper, 1);
    } else {
        int minNode = -1;
        for (int v : upper)
            if (minNode < 0 || alpha[v] < alpha[minNode]) minNode = v;
        std::vector<int> rest;
        for (int v : upper)
            if (v != minNode) rest.push_back(v);
        phi = shiftSubset(alpha, rest, 1);
    }
    if (!checkLabeling(tree, phi, LabelingKind::edgeDistinct()).ok)
        throw std::invalid_argument("alphaUnicyclic: shift collides labels");
    auto prof = profile(tree, phi);
    if (prof.missingEdgeLabels.size() != 1)
        throw std::invalid_argument("alphaUnicyclic: shift did not vacate exactly one edge label");
    int m = prof.missingEdgeLabels[0];
    auto& pairs = prof.rSets.at(m);
    if (pairs.empty()) throw std::invalid_argument("alphaUnicyclic: no valid closing pair");
    AlphaUnicyclicResult res;
    res.graph = tree.plusEdge(pairs[0].first, pairs[0].second);
    res.labeling = phi;
    selfCheck(res.graph, res.labeling, LabelingKind::graceful(), "alphaUnicyclic output graceful");
    mustHold(res.graph.size() == res.graph.order(), "alphaUnicyclic output unicyclic");
    auto inv = cycleInventory(res.graph);
    mustHold(inv.size() == 1, "alphaUnicyclic output has one cycle");
    res.cycleLength = inv[0].second;
    return res;
}

LabeledGraph replicatePartition(const Graph& tree, const Labeling& alpha, int copies) {
    requireKind(tree, alpha, LabelingKind::alpha(), "replicatePartition: labeling not alpha");
    if (copies < 0) throw std::invalid_argument("replicatePartition: copies >= 0");
    int k = alphaBoundary(tree, alpha);
    std::vector<int> lowLabels;
    for (int v = 0; v < tree.order(); ++v)
        if (alpha[v] <= k) lowLabels.push_back(alpha[v]);
    std::sort(lowLabels.begin(), lowLabels.end());
    for (size_t i = 0; i < lowLabels.size(); ++i)
        if (lowLabels[i] != static_cast<int>(i))
            throw std::invalid_argument("replicatePartition: lower side must carry labels 0..|A|-1");

    int q = tree.size();
    std::vector<int> upper;
    for (int v = 0; v < tree.order(); ++v)
        if (alpha[v] > k) upper.push_back(v);
    Graph h = tree;
    Labeling lab = alpha;
    for (int i = 1; i <= copies; ++i) {
        std::map<int, int> copyIndex;  // original upper node -> new node id
        for (int b : upper) {
            copyIndex[b] = h.order();
            h = h.plusVertex({});
            lab.push_back(alpha[b] + i * q);
        }
        for (auto [x, y] : tree.edges()) {
            int a = alpha[x] <= k ? x : y;
            int b = alpha[x] <= k ? y : x;
            h = h.plusEdge(a, copyIndex[b]);
        }
    }
    selfCheck(h, lab, LabelingKind::graceful(), "replicatePartition output graceful");
    mustHold(classify(h).bipartite, "replicatePartition output bipartite");
    if (h.order() <= 12)
        for (auto& [mask, len] : cycleInventory(h)) mustHold(len == 4, "replicatePartition 4-cycles");
    return {h, lab};
}

LabeledGraph glueAlpha(const Graph& g, const Labeling& alpha, const Labeling& alpha2) {
    requireKind(g, alpha, LabelingKind::alpha(), "glueAlpha: first labeling not alpha");
    requireKind(g, alpha2, LabelingKind::alpha(), "glueAlpha: second labeling not alpha");
    int k1 = alphaBoundary(g, alpha), k2 = alphaBoundary(g, alpha2);
    std::set<int> a1, a2;
    for (int v = 0; v < g.order(); ++v) {
        if (alpha[v] <= k1) a1.insert(alpha[v]);
        if (alpha2[v] <= k2) a2.insert(alpha2[v]);
    }
    if (a1 != a2) throw std::invalid_argument("glueAlpha: lower-side label sets differ");
    int q = g.size();
    Graph h = g;
    Labeling lab = alpha;
    std::map<int, int> upperCopy;  // node of the second copy -> new id
    for (int v = 0; v < g.order(); ++v) {
        if (alpha2[v] <= k2) continue;
        upperCopy[v] = h.order();
        h = h.plusVertex({});
        lab.push_back(alpha2[v] + q);
    }
    for (auto [x, y] : g.edges()) {
        int a = alpha2[x] <= k2 ? x : y;
        int b = alpha2[x] <= k2 ? y : x;
        h = h.plusEdge(nodeWithLabel(alpha, alpha2[a]), upperCopy[b]);
    }
    selfCheck(h, lab, LabelingKind::alpha(), "glueAlpha output alpha");
    mustHold(h.size() == 2 * q, "glueAlpha output has 2q edges");
    return {h, lab};
}

namespace {

// greedy Sidon sequence: all pairwise differences distinct
std::vector<int> sidonLabels(int count) {
    std::vector<int> out;
    std::set<int> diffs;
    int x = 0;
    while (static_cast<int>(out.size()) < count) {
        bool ok = true;
        std::set<int> add;
        for (int y : out) {
            int d = x - y;
            if (diffs.count(d) || add.count(d)) {
                ok = false;
                break;
            }
            add.insert(d);
        }
        if (ok) {
            out.push_back(x);
            diffs.insert(add.begin(), add.end());
        }
        ++x;
    }
    return out;
}

}  // namespace

EmbeddingResult embedGraceful(const Graph& g, EmbedStrategy strategy, const SearchBudget& budget,
                              const std::optional<Labeling>& initialLabeling) {
    EmbeddingResult emb;
    switch (strategy) {
        case EmbedStrategy::FreeLabeling: {
            Labeling phi;
            if (initialLabeling) {
                phi = *initialLabeling;
                requireKind(g, phi, LabelingKind::edgeDistinct(),
                            "embedGraceful: initial labeling must be edge-distinct");
                if (nodeWithLabel(phi, 0) < 0)
                    throw std::invalid_argument("embedGraceful: initial labeling needs a 0-node");
            } else if (g.size() <= 15) {
                phi = findOptimal(g, budget).witness;
            } else {
                auto marks = sidonLabels(g.order());
                phi.assign(marks.begin(), marks.end());
            }
            auto prof = profile(g, phi);
            Graph h = g;
            Labeling lab = phi;
            int zero = nodeWithLabel(lab, 0);
            for (int e : prof.missingEdgeLabels) {
                int en = nodeWithLabel(lab, e);
                if (en >= 0) {
                    h = h.plusEdge(zero, en);
                } else {
                    h = h.plusVertex({zero});
                    lab.push_back(e);
                }
            }
            emb.host = h;
            emb.hostLabeling = lab;
            emb.injection.resize(g.order());
            std::iota(emb.injection.begin(), emb.injection.end(), 0);
            emb.induced = false;
            break;
        }
        case EmbedStrategy::CompleteHost: {
            if (g.order() > 6) throw std::invalid_argument("embedGraceful: complete-host cap p <= 6");
            Graph kp = generate("complete", {g.order()});
            Labeling phi = findOptimal(kp, budget).witness;
            auto prof = profile(kp, phi);
            Graph h = kp;
            Labeling lab = phi;
            int zero = nodeWithLabel(lab, 0);
            for (int e : prof.missingEdgeLabels) {
                mustHold(nodeWithLabel(phi, e) < 0, "missing labels of a complete graph are not node labels");
                h = h.plusVertex({zero});
                lab.push_back(e);
            }
            emb.host = h;
            emb.hostLabeling = lab;
            emb.injection.resize(g.order());
            std::iota(emb.injection.begin(), emb.injection.end(), 0);
            emb.induced = (g.size() == kp.size());
            break;
        }
        case EmbedStrategy::InducedHost: {
            auto direct = findGraceful(g, budget);
            if (direct.found()) {
                emb.host = g;
                emb.hostLabeling = *direct.witness;
                emb.injection.resize(g.order());
                std::iota(emb.injection.begin(), emb.injection.end(), 0);
                emb.induced = true;
                checkInjectionPreserved(g, emb);
                return emb;
            }
            Labeling phi = findOptimal(g, budget).witness;
            auto prof = profile(g, phi);
            int opt = prof.q0;
            int u = nodeWithLabel(phi, 0);
            int v = nodeWithLabel(phi, opt);
            std::vector<int> q1, dList;
            std::set<int> nodeLabels(phi.begin(), phi.end());
            for (int e : prof.missingEdgeLabels)
                (nodeLabels.count(e) ? dList : q1).push_back(e);
            int m = dList.empty() ? 0 : *std::max_element(dList.begin(), dList.end());
            Graph h = g;
            Labeling lab = phi;
            for (int e : q1) {  // pendants at the 0-node carrying the doubly-missing labels
                h = h.plusVertex({u});
                lab.push_back(e);
            }
            std::map<int, int> chainNode;  // offset j -> node id of the pendant labeled opt+j
            for (int j = 1; j <= m; ++j) {
                chainNode[j] = h.order();
                h = h.plusVertex({u});
                lab.push_back(opt + j);
            }
            for (int d : dList) h = h.plusEdge(chainNode[d], v);
            emb.host = h;
            emb.hostLabeling = lab;
            emb.injection.resize(g.order());
            std::iota(emb.injection.begin(), emb.injection.end(), 0);
            emb.induced = true;
            break;
        }
    }
    selfCheck(emb.host, emb.hostLabeling, LabelingKind::graceful(), "embedGraceful host graceful");
    checkInjectionPreserved(g, emb);
    return emb;
}

OptimalEmbedding embedGracefulOptimal(const Graph& g, const Labeling& optimal, int orderBudget) {
    requireKind(g, optimal, LabelingKind::edgeDistinct(), "embedGracefulOptimal: labeling not edge-distinct");
    OptimalEmbedding res;
    auto prof = profile(g, optimal);
    int opt = prof.q0;
    if (prof.missingEdgeLabels.empty() && opt == g.size()) {
        // already graceful: the guest is its own host
        res.guestGraceful = true;
        res.hostOrder = g.order();
        EmbeddingResult emb{g, optimal, {}, true};
        emb.injection.resize(g.order());
        std::iota(emb.injection.begin(), emb.injection.end(), 0);
        res.minimalHosts.push_back(std::move(emb));
        res.allConnected = g.connected();
        return res;
    }
    std::vector<int> avail = prof.missingNodeLabels;
    const auto& missing = prof.missingEdgeLabels;
    int maxS = std::min<int>(orderBudget, static_cast<int>(avail.size()));
    res.searchedAllOrders = maxS == static_cast<int>(avail.size());
    for (int s = 1; s <= maxS; ++s) {
        std::map<std::string, EmbeddingResult> hosts;
        std::vector<int> combo(s);
        std::function<void(int, int)> pickLabels = [&](int from, int got) {
            if (got == s) {
                // new node i carries label combo[i]
                Labeling lab = optimal;
                for (int x : combo) lab.push_back(x);
                int base = g.order();
                // candidate realizer edges per missing label, at least one new endpoint
                std::vector<std::vector<std::pair<int, int>>> options;
                for (int e : missing) {
                    std::vector<std::pair<int, int>> opts;
                    for (int i = 0; i < s; ++i) {
                        for (int partner : {combo[i] - e, combo[i] + e}) {
                            if (partner < 0 || partner > opt) continue;
                            int pn = nodeWithLabel(lab, partner);
                            if (pn < 0 || pn == base + i) continue;
                            int a = std::min(pn, base + i), b = std::max(pn, base + i);
                            if (pn >= base && pn < base + i) continue;  // counted from the other side
                            opts.push_back({a, b});
                        }
                    }
                    std::sort(opts.begin(), opts.end());
                    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
                    options.push_back(std::move(opts));
                }
                for (auto& o : options)
                    if (o.empty()) return;
                std::vector<size_t> pick(options.size(), 0);
                while (true) {
                    EdgeList extra;
                    for (size_t i = 0; i < options.size(); ++i) extra.push_back(options[i][pick[i]]);
                    std::set<int> touched;
                    for (auto [a, b] : extra) {
                        if (a >= base) touched.insert(a);
                        if (b >= base) touched.insert(b);
                    }
                    if (static_cast<int>(touched.size()) == s) {
                        EdgeList edges = g.edges();
                        for (auto& e : extra) edges.push_back(e);
                        bool dup = false;
                        {
                            auto sorted = edges;
                            std::sort(sorted.begin(), sorted.end());
                            dup = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
                        }
                        if (!dup) {
                            Graph h(g.order() + s, edges);
                            if (checkLabeling(h, lab, LabelingKind::graceful()).ok) {
                                EmbeddingResult emb{h, lab, {}, true};
                                emb.injection.resize(g.order());
                                std::iota(emb.injection.begin(), emb.injection.end(), 0);
                                std::string key = h.order() <= 16 ? canonicalForm(h).g6
                                                                  : toGraph6(h);
                                hosts.emplace(key, std::move(emb));
                            }
                        }
                    }
                    size_t i = 0;
                    for (; i < pick.size(); ++i) {
                        if (++pick[i] < options[i].size()) break;
                        pick[i] = 0;
                    }
                    if (i == pick.size()) break;
                }
                return;
            }
            for (int i = from; i < static_cast<int>(avail.size()); ++i) {
                combo[got] = avail[i];
                pickLabels(i + 1, got + 1);
            }
        };
        pickLabels(0, 0);
        if (!hosts.empty()) {
            res.hostOrder = g.order() + s;
            res.allConnected = true;
            for (auto& [key, emb] : hosts) {
                selfCheck(emb.host, emb.hostLabeling, LabelingKind::graceful(),
                          "embedGracefulOptimal host graceful");
                checkInjectionPreserved(g, emb);
                if (!emb.host.connected()) res.allConnected = false;
                res.minimalHosts.push_back(emb);
            }
            return res;
        }
    }
    return res;  // no host over this labeling; minimalHosts stays empty
}

OptimalEmbeddingAudit optimalEmbeddingAudit(const Graph& g, const SearchBudget& budget) {
    auto direct = findGraceful(g, budget);
    OptimalEmbeddingAudit audit;
    if (direct.found()) {  // nothing to embed
        audit.optOrder = g.order();
        audit.labelingsTried = 1;
        audit.labelingsWithHosts = 1;
        EmbeddingResult emb{g, *direct.witness, {}, true};
        emb.injection.resize(g.order());
        std::iota(emb.injection.begin(), emb.injection.end(), 0);
        audit.minimalHosts.push_back(std::move(emb));
        audit.allConnected = g.connected();
        return audit;
    }
    int opt = findOptimal(g, budget).opt;
    std::map<std::string, EmbeddingResult> best;
    forEachEdgeDistinctLabeling(g, opt, budget, [&](const Labeling& phi) {
        if (*std::min_element(phi.begin(), phi.end()) != 0) return true;  // shifted duplicate
        ++audit.labelingsTried;
        auto one = embedGracefulOptimal(g, phi);
        if (one.minimalHosts.empty()) return true;
        ++audit.labelingsWithHosts;
        if (audit.optOrder == 0 || one.hostOrder < audit.optOrder) {
            audit.optOrder = one.hostOrder;
            best.clear();
        }
        if (one.hostOrder == audit.optOrder)
            for (auto& emb : one.minimalHosts) {
                std::string key =
                    emb.host.order() <= 16 ? canonicalForm(emb.host).g6 : toGraph6(emb.host);
                best.emplace(key, emb);
            }
        return true;
    });
    audit.allConnected = !best.empty();
    for (auto& [key, emb] : best) {
        if (!emb.host.connected()) audit.allConnected = false;
        audit.minimalHosts.push_back(emb);
    }
    return audit;
}

EmbeddingResult mergeComponents(const EmbeddingResult& emb) {
    if (emb.host.connected()) return emb;
    auto comp = emb.host.componentIds();
    int zero = nodeWithLabel(emb.hostLabeling, 0);
    int home = comp[zero];
    // running structure: nodes of the home component keep identity; others
    // shift their labels down and merge at equal labels, one component at a time
    std::map<int, int> byLabel;  // label -> merged node id
    std::vector<int> mergedLabelOf;
    EdgeList mergedEdges;
    std::vector<int> nodeMap(emb.host.order(), -1);
    auto ensureNode = [&](int label) {
        auto it = byLabel.find(label);
        if (it != byLabel.end()) return it->second;
        int id = static_cast<int>(mergedLabelOf.size());
        mergedLabelOf.push_back(label);
        byLabel[label] = id;
        return id;
    };
    for (int v = 0; v < emb.host.order(); ++v)
        if (comp[v] == home) nodeMap[v] = ensureNode(emb.hostLabeling[v]);
    for (auto [u, v] : emb.host.edges())
        if (comp[u] == home) mergedEdges.push_back({nodeMap[u], nodeMap[v]});
    int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
    for (int c = 0; c < ncomp; ++c) {
        if (c == home) continue;
        int mn = INT_MAX;
        for (int v = 0; v < emb.host.order(); ++v)
            if (comp[v] == c) mn = std::min(mn, emb.hostLabeling[v]);
        for (int v = 0; v < emb.host.order(); ++v)
            if (comp[v] == c) nodeMap[v] = ensureNode(emb.hostLabeling[v] - mn);
        for (auto [u, v] : emb.host.edges())
            if (comp[u] == c) mergedEdges.push_back({nodeMap[u], nodeMap[v]});
    }
    EmbeddingResult out;
    out.host = Graph(static_cast<int>(mergedLabelOf.size()), mergedEdges);
    out.hostLabeling = mergedLabelOf;
    out.injection.clear();  // the guest may no longer be induced; injection dropped
    out.induced = false;
    selfCheck(out.host, out.hostLabeling, LabelingKind::graceful(), "mergeComponents output graceful");
    return out;
}

LabeledGraph apexGraceful(const Graph& g, const Labeling& total) {
    requireKind(g, total, LabelingKind::total(), "apexGraceful: labeling is not total");
    Graph h = joinGraphs(Graph(1, {}), g);  // apex is node 0
    Labeling lab;
    lab.push_back(0);
    for (int x : total) lab.push_back(x);
    selfCheck(h, lab, LabelingKind::graceful(), "apexGraceful output graceful");
    return {h, lab};
}

Labeling treeTotalFromGraceful(const Graph& tree, const Labeling& graceful) {
    if (!classify(tree).tree) throw std::invalid_argument("treeTotalFromGraceful: input must be a tree");
    requireKind(tree, graceful, LabelingKind::graceful(), "treeTotalFromGraceful: not graceful");
    Labeling mu = graceful;
    for (int& x : mu) x += tree.order();
    selfCheck(tree, mu, LabelingKind::total(), "treeTotalFromGraceful output total");
    return mu;
}

Labeling semitotalNormalize(const Graph& g, const Labeling& semitotal, int fullDegreeNode) {
    int p = g.order(), q = g.size();
    int opt = *std::max_element(semitotal.begin(), semitotal.end());
    int slack = opt - p - q;
    if (slack < 0 || !checkLabeling(g, semitotal, LabelingKind::semitotal(slack)).ok)
        throw std::invalid_argument("semitotalNormalize: input is not a semitotal labeling");
    if (fullDegreeNode < 0 || fullDegreeNode >= p || g.degree(fullDegreeNode) != p - 1)
        throw std::invalid_argument("semitotalNormalize: node must have full degree");
    if (semitotal[fullDegreeNode] != opt)
        throw std::invalid_argument("semitotalNormalize: the full-degree node must carry the top label");
    std::set<int> values(semitotal.begin(), semitotal.end());
    bool topMinusOneIsNode = values.count(opt - 1);
    if (!topMinusOneIsNode) {
        bool asEdge = false;
        for (auto [u, v] : g.edges())
            if (std::abs(semitotal[u] - semitotal[v]) == opt - 1) asEdge = true;
        if (!asEdge)
            throw std::invalid_argument("semitotalNormalize: opt-1 must appear as a node or edge label");
    }
    if (values.count(1)) return semitotal;  // nothing to do
    Labeling mu = semitotal;
    for (int v = 0; v < p; ++v)
        if (v != fullDegreeNode) mu[v] = opt - semitotal[v];
    selfCheck(g, mu, LabelingKind::semitotal(slack), "semitotalNormalize output semitotal");
    if (topMinusOneIsNode)
        mustHold(std::find(mu.begin(), mu.end(), 1) != mu.end(), "normalized labeling contains 1");
    return mu;
}

LabeledGraph growPendants(const Graph& g, const Labeling& phi, PendantMode mode, int t) {
    if (t < 0) throw std::invalid_argument("growPendants: t >= 0");
    if (t == 0) return {g, phi};
    switch (mode) {
        case PendantMode::GracefulAtZero: {
            requireKind(g, phi, LabelingKind::graceful(), "growPendants: labeling not graceful");
            int q = g.size();
            int zero = nodeWithLabel(phi, 0);
            Graph h = g;
            Labeling lab = phi;
            for (int j = 1; j <= t; ++j) {
                h = h.plusVertex({zero});
                lab.push_back(q + j);
            }
            selfCheck(h, lab, LabelingKind::graceful(), "growPendants graceful output");
            return {h, lab};
        }
        case PendantMode::TotalAtOne: {
            requireKind(g, phi, LabelingKind::total(), "growPendants: labeling not total");
            int one = nodeWithLabel(phi, 1);
            if (one < 0) throw std::invalid_argument("growPendants: no node labeled 1");
            int pq = g.order() + g.size();
            Graph h = g;
            Labeling lab = phi;
            for (int j = 1; j <= t; ++j) {
                h = h.plusVertex({one});
                lab.push_back(pq + 2 * j);  // the pendant edges fill the odd gaps
            }
            selfCheck(h, lab, LabelingKind::total(), "growPendants total output");
            return {h, lab};
        }
        case PendantMode::TotalStepAlpha: {
            requireKind(g, phi, LabelingKind::total(), "growPendants: labeling not total");
            Graph h = g;
            Labeling lab = phi;
            for (int round = 0; round < t; ++round) {
                int alpha = *std::min_element(lab.begin(), lab.end());
                int anchor = nodeWithLabel(lab, alpha);
                int pq = h.order() + h.size();
                for (int j = 1; j <= alpha; ++j) {
                    h = h.plusVertex({anchor});
                    lab.push_back(pq + alpha + j);
                }
                selfCheck(h, lab, LabelingKind::total(), "growPendants alpha-step output");
            }
            return {h, lab};
        }
    }
    throw std::logic_error("growPendants: unknown mode");
}

EmbeddingResult embedSupergraceful(const Graph& g, const Labeling& semitotal,
                                   SupergracefulEmbedMode mode) {
    int p = g.order(), q = g.size();
    int opt = *std::max_element(semitotal.begin(), semitotal.end());
    int slack = opt - p - q;
    if (slack < 0 || !checkLabeling(g, semitotal, LabelingKind::semitotal(slack)).ok)
        throw std::invalid_argument("embedSupergraceful: input is not a semitotal labeling");
    EmbeddingResult emb;
    emb.injection.resize(p);
    std::iota(emb.injection.begin(), emb.injection.end(), 0);
    if (slack == 0) {  // supergraceful input is its own host
        emb.host = g;
        emb.hostLabeling = semitotal;
        emb.induced = true;
        checkInjectionPreserved(g, emb);
        return emb;
    }
    std::set<int> present(semitotal.begin(), semitotal.end());
    for (auto [u, v] : g.edges()) present.insert(std::abs(semitotal[u] - semitotal[v]));
    std::vector<int> missing;
    for (int x = 1; x <= opt; ++x)
        if (!present.count(x)) missing.push_back(x);
    if (mode == SupergracefulEmbedMode::IsolatedCover) {
        Graph h = g;
        Labeling lab = semitotal;
        for (int x : missing) {
            h = h.plusVertex({});
            lab.push_back(x);
        }
        emb.host = h;
        emb.hostLabeling = lab;
        emb.induced = true;
        selfCheck(emb.host, emb.hostLabeling, LabelingKind::total(), "isolated-cover host total");
        checkInjectionPreserved(g, emb);
        return emb;
    }
    // connected construction: pendants at the 1-node, missing labels realized
    // as edges toward parity-matched anchor nodes
    int one = nodeWithLabel(semitotal, 1);
    if (one < 0) throw std::invalid_argument("embedSupergraceful: connected mode needs node label 1");
    std::vector<int> evens, odds;
    for (int x : missing) (x % 2 == 0 ? evens : odds).push_back(x);
    int parityEven = opt % 2;        // parity a node needs to realize even missing labels
    int parityOdd = 1 - parityEven;  // and odd ones
    auto pickAnchor = [&](int parity, int minMissing) {
        int best = -1;
        for (int v = 0; v < p; ++v) {
            if (semitotal[v] % 2 != parity) continue;
            if (semitotal[v] + minMissing <= opt) continue;
            if (best < 0 || semitotal[v] < semitotal[best]) best = v;
        }
        return best;
    };
    int t = opt;
    int anchorEven = -1, anchorOdd = -1;
    if (!evens.empty()) {
        anchorEven = pickAnchor(parityEven, evens.front());
        if (anchorEven < 0)
            throw std::invalid_argument("embedSupergraceful: no anchor for the even missing labels");
        t = std::max(t, semitotal[anchorEven] + evens.back());
    }
    if (!odds.empty()) {
        anchorOdd = pickAnchor(parityOdd, odds.front());
        if (anchorOdd < 0)
            throw std::invalid_argument("embedSupergraceful: no anchor for the odd missing labels");
        t = std::max(t, semitotal[anchorOdd] + odds.back());
    }
    Graph h = g;
    Labeling lab = semitotal;
    std::map<int, int> nodeOf;  // new node label -> id
    for (int x = opt + 2; x <= t; x += 2) {
        nodeOf[x] = h.order();
        h = h.plusVertex({one});
        lab.push_back(x);
    }
    for (int x : missing) {
        int anchor = x % 2 == 0 ? anchorEven : anchorOdd;
        int z = semitotal[anchor] + x;
        mustHold(nodeOf.count(z) > 0, "realizer node exists for each missing label");
        h = h.plusEdge(nodeOf[z], anchor);
    }
    emb.host = h;
    emb.hostLabeling = lab;
    emb.induced = true;
    selfCheck(emb.host, emb.hostLabeling, LabelingKind::total(), "connected host total");
    checkInjectionPreserved(g, emb);
    return emb;
}

Graph nonPrimeExtremal(int n, NonPrimeFamily family) {
    EdgeList e;
    int order = n;
    auto triangle = [&](int a) {
        e.push_back({a, a + 1});
        e.push_back({a, a + 2});
        e.push_back({a + 1, a + 2});
    };
    auto path = [&](int from, int to, int first, int count) {
        // path from `from` through `count` fresh nodes starting at id `first` to `to`
        int prev = from;
        for (int i = 0; i < count; ++i) {
            e.push_back({std::min(prev, first + i), std::max(prev, first + i)});
            prev = first + i;
        }
        e.push_back({std::min(prev, to), std::max(prev, to)});
    };
    switch (family) {
        case NonPrimeFamily::ConnectedEven: {
            if (n < 8 || n % 2) throw std::invalid_argument("nonPrimeExtremal: even family needs even n >= 8");
            int t = (n - 6) / 2;
            triangle(0);
            triangle(3);
            path(0, 3, 6, 2 * t);
            break;
        }
        case NonPrimeFamily::ConnectedOdd1: {
            if (n < 9 || n % 4 != 1) throw std::invalid_argument("nonPrimeExtremal: family needs n = 4t+1, t >= 2");
            int t = (n - 1) / 4;
            triangle(0);
            triangle(3);
            triangle(6);
            int i1 = 2 * (t - 2), i2 = 2 * (t - 2);  // even-length internal paths
            path(0, 3, 9, i1);
            path(5, 6, 9 + i1, i2);
            break;
        }
        case NonPrimeFamily::ConnectedOdd3: {
            if (n < 11 || n % 4 != 3) throw std::invalid_argument("nonPrimeExtremal: family needs n = 4t+3, t >= 2");
            int t = (n - 3) / 4;
            triangle(0);
            triangle(3);
            triangle(6);
            int i1 = 2 * t - 4, i2 = 2 * t - 2;  // even-length internal paths
            path(0, 3, 9, i1);
            path(5, 6, 9 + i1, i2);
            break;
        }
        case NonPrimeFamily::Disconnected: {
            if (n == 6) {
                triangle(0);
                triangle(3);
                break;
            }
            if (n < 8) throw std::invalid_argument("nonPrimeExtremal: disconnected family needs n = 6 or n >= 8");
            if (n % 3 == 0) {
                for (int i = 0; i < n / 3; ++i) triangle(3 * i);
            } else if (n % 3 == 1) {
                int t = n / 3;
                for (int i = 0; i < t - 1; ++i) triangle(3 * i);
                int c = 3 * (t - 1);
                e.push_back({c, c + 1});
                e.push_back({c + 1, c + 2});
                e.push_back({c + 2, c + 3});
                e.push_back({c, c + 3});
            } else {
                int t = n / 3;
                for (int i = 0; i < t - 1; ++i) triangle(3 * i);
                int c = 3 * (t - 1);
                for (int j = 0; j < 4; ++j) e.push_back({c + j, c + j + 1});
                e.push_back({c, c + 4});
            }
            break;
        }
    }
    Graph g(order, e);
    // claimed size: n+1 (even), n+2 (odd), n (disconnected)
    int expectEdges = family == NonPrimeFamily::ConnectedEven  ? n + 1
                      : family == NonPrimeFamily::Disconnected ? n
                                                                : n + 2;
    mustHold(g.size() == expectEdges, "extremal family edge count");
    auto inv = invariantNumbers(g);
    mustHold(inv.beta0 < n / 2, "extremal family independence number below floor(n/2)");
    return g;
}

}  // namespace labelkit
