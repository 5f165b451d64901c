#include "labelkit/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "labelkit/canonical.hpp"

namespace labelkit {

namespace {

// ---- free trees ----------------------------------------------------------

// Beyer-Hedetniemi: all canonical level sequences of rooted trees on n nodes
// (root at level 1, subtree blocks in non-increasing order), generated in
// decreasing lexicographic order starting from the path (1,2,...,n).
std::vector<std::vector<int>> rootedLevelSequences(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> L(n);
    for (int i = 0; i < n; ++i) L[i] = i + 1;
    out.push_back(L);
    if (n <= 2) return out;
    while (true) {
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (L[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (L[i] == L[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
        out.push_back(L);
    }
    return out;
}

Graph treeFromLevelSequence(const std::vector<int>& L) {
    int n = static_cast<int>(L.size());
    EdgeList e;
    std::vector<int> stack;  // stack[d] = most recent node at level d+1
    stack.assign(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        int lvl = L[i];
        if (lvl >= 2) e.push_back({stack[lvl - 2], i});
        stack[lvl - 1] = i;
    }
    return Graph(n, std::move(e));
}

std::vector<int> centroids(const Graph& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> size(n, 0), maxComp(n, 0), order, parent(n, -1);
    std::vector<bool> seen(n, false);
    order.reserve(n);
    order.push_back(0);
    seen[0] = true;
    for (size_t i = 0; i < order.size(); ++i)
        for (int w : t.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        ++size[v];
        maxComp[v] = std::max(maxComp[v], n - size[v]);
        if (parent[v] >= 0) {
            size[parent[v]] += size[v];
            maxComp[parent[v]] = std::max(maxComp[parent[v]], size[v]);
        }
    }
    int best = n;
    for (int v = 0; v < n; ++v) best = std::min(best, maxComp[v]);
    std::vector<int> c;
    for (int v = 0; v < n; ++v)
        if (maxComp[v] == best) c.push_back(v);
    return c;
}

std::string ahuEncode(const Graph& t, int v, int blocked) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v))
        if (w != blocked) kids.push_back(ahuEncode(t, w, v));
    std::sort(kids.rbegin(), kids.rend());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

std::string freeTreeCode(const Graph& t) {
    auto c = centroids(t);
    if (c.size() == 1) return "R" + ahuEncode(t, c[0], -1);
    std::string a = ahuEncode(t, c[0], c[1]);
    std::string b = ahuEncode(t, c[1], c[0]);
    if (a < b) std::swap(a, b);
    return "B" + a + b;
}

std::vector<Graph> freeTrees(int n) {
    if (n == 1) return {Graph(1, {})};
    std::map<std::string, Graph> seen;
    for (auto& seq : rootedLevelSequences(n)) {
        Graph t = treeFromLevelSequence(seq);
        seen.emplace(freeTreeCode(t), std::move(t));
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [code, t] : seen) out.push_back(std::move(t));
    return out;
}

// ---- general graphs ------------------------------------------------------

std::vector<Graph> allGraphsByAugmentation(int order, int maxEdges) {
    std::vector<Graph> cur = {Graph(1, {})};
    for (int k = 2; k <= order; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& g : cur) {
            int budget = maxEdges < 0 ? k * (k - 1) / 2 : maxEdges - g.size();
            for (uint32_t S = 0; S < (1u << (k - 1)); ++S) {
                if (std::popcount(S) > budget) continue;
                std::vector<int> nbrs;
                for (int b = 0; b < k - 1; ++b)
                    if (S & (1u << b)) nbrs.push_back(b);
                Graph h = g.plusVertex(nbrs);
                next.emplace(canonicalForm(h).g6, std::move(h));
            }
        }
        cur.clear();
        cur.reserve(next.size());
        for (auto& [key, g] : next) cur.push_back(std::move(g));
    }
    return cur;
}

}  // namespace

std::vector<Graph> enumerateGraphs(GraphKind kind, int order, EnumOptions opts) {
    if (order < 1) throw std::invalid_argument("enumerateGraphs: order >= 1");
    auto sortByKey = [](std::vector<Graph>& v) {
        std::vector<std::pair<std::string, Graph>> keyed;
        keyed.reserve(v.size());
        for (auto& g : v) keyed.push_back({canonicalForm(g).g6, std::move(g)});
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        v.clear();
        for (auto& [k, g] : keyed) v.push_back(std::move(g));
    };
    switch (kind) {
        case GraphKind::Trees: {
            if (order > 15) throw std::invalid_argument("enumerateGraphs: tree order cap is 15");
            auto ts = freeTrees(order);
            sortByKey(ts);
            return ts;
        }
        case GraphKind::Unicyclic: {
            if (order > 9) throw std::invalid_argument("enumerateGraphs: unicyclic order cap is 9");
            if (order < 3) return {};
            std::map<std::string, Graph> seen;
            for (const Graph& t : freeTrees(order)) {
                for (int u = 0; u < order; ++u)
                    for (int v = u + 1; v < order; ++v) {
                        if (t.adjacent(u, v)) continue;
                        Graph h = t.plusEdge(u, v);
                        seen.emplace(canonicalForm(h).g6, std::move(h));
                    }
            }
            std::vector<Graph> out;
            for (auto& [k, g] : seen) out.push_back(std::move(g));
            return out;
        }
        case GraphKind::AllGraphs:
        case GraphKind::ConnectedGraphs:
        case GraphKind::EulerianFiltered: {
            int cap = opts.maxEdges >= 0 ? 8 : 7;
            if (order > cap)
                throw std::invalid_argument(
                    "enumerateGraphs: order cap is 7 for general graphs (8 with an edge bound)");
            auto gs = allGraphsByAugmentation(order, opts.maxEdges);
            std::vector<Graph> out;
            for (auto& g : gs) {
                if (kind == GraphKind::ConnectedGraphs && !g.connected()) continue;
                if (kind == GraphKind::EulerianFiltered) {
                    if (!g.connected()) continue;
                    bool even = true;
                    for (int v = 0; v < g.order(); ++v)
                        if (g.degree(v) % 2) even = false;
                    if (!even) continue;
                }
                out.push_back(std::move(g));
            }
            // augmentation already emits in canonical-key order
            return out;
        }
    }
    throw std::invalid_argument("enumerateGraphs: unknown kind");
}

}  // namespace labelkit
