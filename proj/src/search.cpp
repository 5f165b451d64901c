#include "labelkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "labelkit/canonical.hpp"
#include "labelkit/labeling.hpp"

namespace labelkit {

namespace {

struct BudgetGuard {
    SearchBudget budget;
    SearchStats* stats;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool exceeded = false;

    // false once the budget is spent
    bool tick() {
        if (exceeded) return false;
        ++stats->nodes;
        if (stats->nodes > budget.maxNodes) {
            exceeded = true;
            return false;
        }
        if ((stats->nodes & 2047) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (static_cast<uint64_t>(ms) > budget.maxWallMs) exceeded = true;
        }
        return !exceeded;
    }
    void finish() {
        stats->wallMs =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    }
};

std::vector<int> rankByDegree(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> rank(g.order());
    for (int i = 0; i < g.order(); ++i) rank[order[i]] = i;
    return rank;
}

// Difference-driven graceful backtracking: edge labels are realized from q
// downward; a slot either reuses a difference already forced by the partial
// labeling or picks an edge plus endpoint values that produce it. Node order
// is by descending degree, value choices ascend, so the search is a fixed
// canonical branch order.
struct GracefulSolver {
    const Graph& g;
    BudgetGuard& guard;
    int p, q;
    std::vector<int> rank;
    EdgeList edgeOrder;
    std::vector<int> vlab;
    std::vector<char> labelUsed, diffUsed;
    std::optional<std::pair<std::pair<int, int>, int>> forcedEdge;
    Labeling witness;

    GracefulSolver(const Graph& graph, BudgetGuard& bg) : g(graph), guard(bg) {
        p = g.order();
        q = g.size();
        rank = rankByDegree(g);
        edgeOrder = g.edges();
        std::sort(edgeOrder.begin(), edgeOrder.end(), [&](auto a, auto b) {
            auto key = [&](std::pair<int, int> e) {
                return std::pair{std::min(rank[e.first], rank[e.second]),
                                 std::max(rank[e.first], rank[e.second])};
            };
            return key(a) < key(b);
        });
        vlab.assign(p, -1);
        labelUsed.assign(q + 1, 0);
        diffUsed.assign(q + 1, 0);
    }

    struct Undo {
        int node;
        std::vector<int> diffs;
    };

    bool isForced(int a, int b) const {
        if (!forcedEdge) return false;
        auto [u, v] = forcedEdge->first;
        return (a == u && b == v) || (a == v && b == u);
    }

    bool assign(int v, int x, std::vector<Undo>& undos) {
        if (x < 0 || x > q || labelUsed[x]) return false;
        vlab[v] = x;
        labelUsed[x] = 1;
        undos.push_back({v, {}});
        for (int w : g.neighbors(v)) {
            if (vlab[w] < 0) continue;
            int d = std::abs(x - vlab[w]);
            if (diffUsed[d] || (isForced(v, w) && d != forcedEdge->second)) {
                rollbackOne(undos);
                return false;
            }
            diffUsed[d] = 1;
            undos.back().diffs.push_back(d);
        }
        return true;
    }

    void rollbackOne(std::vector<Undo>& undos) {
        auto& u = undos.back();
        for (int d : u.diffs) diffUsed[d] = 0;
        labelUsed[vlab[u.node]] = 0;
        vlab[u.node] = -1;
        undos.pop_back();
    }

    enum class R { Found, Exhausted, Budget };

    R solve(int d) {
        if (!guard.tick()) return R::Budget;
        if (d == 0) {
            // all q differences realized, so every edge has both ends labeled;
            // leftovers are isolated nodes and take the smallest free labels
            witness = vlab;
            std::vector<int> order(p);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
            int next = 0;
            for (int v : order) {
                if (witness[v] >= 0) continue;
                while (labelUsed[next]) ++next;
                witness[v] = next;
                labelUsed[next] = 1;
            }
            for (int v : order)
                if (vlab[v] < 0) labelUsed[witness[v]] = 0;  // restore
            return R::Found;
        }
        if (diffUsed[d]) return solve(d - 1);
        for (auto [eu, ev] : edgeOrder) {
            int u = rank[eu] <= rank[ev] ? eu : ev;
            int v = (u == eu) ? ev : eu;
            bool lu = vlab[u] >= 0, lv = vlab[v] >= 0;
            if (lu && lv) continue;  // its difference is fixed and != d
            std::vector<Undo> undos;
            if (lu || lv) {
                int anchor = lu ? u : v, free = lu ? v : u;
                int a = vlab[anchor];
                for (int x : {a - d, a + d}) {
                    if (!assign(free, x, undos)) continue;
                    R r = solve(d - 1);
                    if (r != R::Exhausted) return r;
                    rollbackOne(undos);
                }
            } else {
                for (int a = 0; a + d <= q; ++a) {
                    for (int flip = 0; flip < 2; ++flip) {
                        if (!assign(u, flip ? a + d : a, undos)) continue;
                        if (assign(v, flip ? a : a + d, undos)) {
                            R r = solve(d - 1);
                            if (r != R::Exhausted) return r;
                            rollbackOne(undos);
                        }
                        rollbackOne(undos);
                    }
                }
            }
        }
        return R::Exhausted;
    }
};

}  // namespace

std::string statusName(SearchOutcome::Status s) {
    switch (s) {
        case SearchOutcome::Status::Found: return "found";
        case SearchOutcome::Status::Exhausted: return "exhausted";
        case SearchOutcome::Status::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

SearchOutcome findGraceful(const Graph& g, const SearchBudget& budget,
                           const GracefulConstraints& cons) {
    if (g.size() > 25) throw std::invalid_argument("findGraceful: practical cap q <= 25");
    SearchOutcome out;
    BudgetGuard guard{budget, &out.stats};
    out.stats.maxDepth = g.size();
    if (g.order() > g.size() + 1) {  // injective labeling into {0..q} impossible
        guard.finish();
        return out;
    }
    GracefulSolver s(g, guard);
    s.forcedEdge = cons.forcedEdgeLabel;
    if (s.forcedEdge) {
        auto [e, lab] = *s.forcedEdge;
        if (!g.adjacent(e.first, e.second))
            throw std::invalid_argument("findGraceful: forced edge not in graph");
        if (lab < 1 || lab > g.size()) {
            guard.finish();
            return out;
        }
    }
    std::vector<GracefulSolver::Undo> undos;
    bool feasible = true;
    for (auto [node, lab] : cons.fixedNodeLabels) {
        if (node < 0 || node >= g.order()) throw std::invalid_argument("fixed label: node out of range");
        if (!s.assign(node, lab, undos)) {
            feasible = false;
            break;
        }
    }
    auto r = feasible ? s.solve(g.size()) : GracefulSolver::R::Exhausted;
    guard.finish();
    switch (r) {
        case GracefulSolver::R::Found: {
            out.status = SearchOutcome::Status::Found;
            out.witness = s.witness;
            if (!checkLabeling(g, s.witness, LabelingKind::graceful()).ok)
                throw std::logic_error("findGraceful: witness failed self-check");
            break;
        }
        case GracefulSolver::R::Exhausted: out.status = SearchOutcome::Status::Exhausted; break;
        case GracefulSolver::R::Budget: out.status = SearchOutcome::Status::BudgetExceeded; break;
    }
    return out;
}

namespace {

enum class R3 { Found, Exhausted, Budget };

// Vertex-sequential exhaustive assignment with injective node values and
// pairwise-distinct absolute differences. In "shared" mode (total/semitotal)
// node and edge values live in one namespace {lo..hi}; otherwise only the
// differences must be distinct among themselves.
struct DistinctDiffSolver {
    const Graph& g;
    BudgetGuard& guard;
    int lo, hi;
    bool shared;
    int mustNodeValue = -1;
    std::vector<int> vorder, vlab;
    std::vector<char> used, diffUsed;
    Labeling result;
    const std::function<bool(const Labeling&)>* enumerate = nullptr;

    DistinctDiffSolver(const Graph& graph, BudgetGuard& bg, int lo_, int hi_, bool share)
        : g(graph), guard(bg), lo(lo_), hi(hi_), shared(share) {
        auto rank = rankByDegree(g);
        vorder.assign(g.order(), 0);
        for (int v = 0; v < g.order(); ++v) vorder[rank[v]] = v;
        vlab.assign(g.order(), -1);
        used.assign(hi + 1, 0);
        diffUsed.assign(hi + 1, 0);
    }

    R3 solve(size_t idx) {
        if (!guard.tick()) return R3::Budget;
        if (idx == vorder.size()) {
            if (mustNodeValue >= 0 && !used[mustNodeValue]) return R3::Exhausted;
            if (enumerate) return (*enumerate)(vlab) ? R3::Exhausted : R3::Found;
            result = vlab;
            return R3::Found;
        }
        int v = vorder[idx];
        for (int x = lo; x <= hi; ++x) {
            if (used[x] || (shared && diffUsed[x])) continue;
            used[x] = 1;  // claim the node value first so its own diffs cannot collide with it
            std::vector<int> claimed;
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (vlab[w] < 0) continue;
                int d = std::abs(x - vlab[w]);
                if (d == 0 || diffUsed[d] || (shared && used[d]) ||
                    (shared && mustNodeValue >= 0 && d == mustNodeValue)) {
                    ok = false;
                    break;
                }
                diffUsed[d] = 1;
                claimed.push_back(d);
            }
            if (ok) {
                vlab[v] = x;
                R3 r = solve(idx + 1);
                if (r != R3::Exhausted) return r;
                vlab[v] = -1;
            }
            for (int d : claimed) diffUsed[d] = 0;
            used[x] = 0;
        }
        return R3::Exhausted;
    }
};

}  // namespace

OptimalResult findOptimal(const Graph& g, const SearchBudget& budget) {
    if (g.size() > 15) throw std::invalid_argument("findOptimal: practical cap q <= 15");
    OptimalResult res;
    BudgetGuard guard{budget, &res.stats};
    for (int m = std::max(g.size(), g.order() - 1);; ++m) {
        DistinctDiffSolver s(g, guard, 0, m, false);
        R3 r = s.solve(0);
        if (r == R3::Budget) {
            res.budgetExceeded = true;
            guard.finish();
            return res;
        }
        if (r == R3::Found) {
            int mn = *std::min_element(s.result.begin(), s.result.end());
            for (int& x : s.result) x -= mn;  // normalize so 0 occurs
            res.opt = m;
            res.witness = s.result;
            if (!checkLabeling(g, res.witness, LabelingKind::edgeDistinct()).ok)
                throw std::logic_error("findOptimal: witness failed self-check");
            guard.finish();
            return res;
        }
    }
}

SearchOutcome findTotal(const Graph& g, const SearchBudget& budget, bool requireNodeLabelOne) {
    if (g.order() + g.size() > 30) throw std::invalid_argument("findTotal: practical cap p+q <= 30");
    SearchOutcome out;
    BudgetGuard guard{budget, &out.stats};
    DistinctDiffSolver s(g, guard, 1, g.order() + g.size(), true);
    if (requireNodeLabelOne) s.mustNodeValue = 1;
    R3 r = s.solve(0);
    guard.finish();
    switch (r) {
        case R3::Found: {
            out.status = SearchOutcome::Status::Found;
            out.witness = s.result;
            // p+q distinct values inside {1..p+q} is exactly a total labeling
            if (!checkLabeling(g, s.result, LabelingKind::total()).ok)
                throw std::logic_error("findTotal: witness failed self-check");
            break;
        }
        case R3::Exhausted: out.status = SearchOutcome::Status::Exhausted; break;
        case R3::Budget: out.status = SearchOutcome::Status::BudgetExceeded; break;
    }
    return out;
}

SemitotalResult findSemitotal(const Graph& g, const SearchBudget& budget,
                              bool requireNodeLabelOne) {
    if (g.order() + g.size() > 30)
        throw std::invalid_argument("findSemitotal: practical cap p+q <= 30");
    SemitotalResult res;
    BudgetGuard guard{budget, &res.stats};
    for (int s = 0;; ++s) {
        DistinctDiffSolver solver(g, guard, 1, g.order() + g.size() + s, true);
        if (requireNodeLabelOne) solver.mustNodeValue = 1;
        R3 r = solver.solve(0);
        if (r == R3::Budget) {
            res.budgetExceeded = true;
            guard.finish();
            return res;
        }
        if (r == R3::Found) {
            res.slack = s;
            res.witness = solver.result;
            if (!checkLabeling(g, res.witness, LabelingKind::semitotal(s)).ok)
                throw std::logic_error("findSemitotal: witness failed self-check");
            guard.finish();
            return res;
        }
    }
}

void forEachSemitotalWitness(const Graph& g, int slack, bool requireNodeLabelOne,
                             const SearchBudget& budget,
                             const std::function<bool(const Labeling&)>& cb) {
    SearchStats stats;
    BudgetGuard guard{budget, &stats};
    DistinctDiffSolver solver(g, guard, 1, g.order() + g.size() + slack, true);
    if (requireNodeLabelOne) solver.mustNodeValue = 1;
    solver.enumerate = &cb;
    solver.solve(0);
}

void forEachEdgeDistinctLabeling(const Graph& g, int maxLabel, const SearchBudget& budget,
                                 const std::function<bool(const Labeling&)>& cb) {
    SearchStats stats;
    BudgetGuard guard{budget, &stats};
    DistinctDiffSolver solver(g, guard, 0, maxLabel, false);
    solver.enumerate = &cb;
    solver.solve(0);
}

SearchOutcome findPrime(const Graph& g, const SearchBudget& budget, bool labelNOnPendant) {
    int n = g.order();
    if (n > 24) throw std::invalid_argument("findPrime: practical cap n <= 24");
    if (labelNOnPendant) {
        bool pendant = false;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) pendant = true;
        if (!pendant) throw std::invalid_argument("findPrime: constraint needs a pendant node");
    }
    SearchOutcome out;
    BudgetGuard guard{budget, &out.stats};
    std::vector<uint32_t> coprime(n + 1, 0);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (std::gcd(a, b) == 1) coprime[a] |= 1u << b;
    auto rank = rankByDegree(g);
    std::vector<int> vorder(n);
    for (int v = 0; v < n; ++v) vorder[rank[v]] = v;
    std::vector<int> vlab(n, -1);
    std::vector<char> used(n + 1, 0);
    auto rec = [&](auto&& self, size_t idx) -> R3 {
        if (!guard.tick()) return R3::Budget;
        if (idx == vorder.size()) return R3::Found;
        int v = vorder[idx];
        for (int x = 1; x <= n; ++x) {
            if (used[x]) continue;
            if (labelNOnPendant && x == n && g.degree(v) != 1) continue;
            bool ok = true;
            for (int w : g.neighbors(v))
                if (vlab[w] > 0 && !(coprime[x] & (1u << vlab[w]))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            vlab[v] = x;
            used[x] = 1;
            R3 r = self(self, idx + 1);
            if (r != R3::Exhausted) return r;
            used[x] = 0;
            vlab[v] = -1;
        }
        return R3::Exhausted;
    };
    R3 r = rec(rec, 0);
    guard.finish();
    switch (r) {
        case R3::Found: {
            out.status = SearchOutcome::Status::Found;
            out.witness = vlab;
            if (!checkLabeling(g, vlab, LabelingKind::prime()).ok)
                throw std::logic_error("findPrime: witness failed self-check");
            break;
        }
        case R3::Exhausted: out.status = SearchOutcome::Status::Exhausted; break;
        case R3::Budget: out.status = SearchOutcome::Status::BudgetExceeded; break;
    }
    return out;
}

namespace {

AttractResult attractWith(const Graph& g, const GracefulConstraints& cons,
                          const SearchBudget& budget) {
    AttractResult res;
    auto constrained = findGraceful(g, budget, cons);
    res.status = constrained.status;
    if (constrained.found()) {
        res.attractive = true;
        res.graphGraceful = true;
        return res;
    }
    if (constrained.status == SearchOutcome::Status::BudgetExceeded) return res;
    auto plain = findGraceful(g, budget);
    res.graphGraceful = plain.found();
    if (plain.status == SearchOutcome::Status::BudgetExceeded)
        res.status = SearchOutcome::Status::BudgetExceeded;
    return res;
}

}  // namespace

AttractResult attractNode(const Graph& g, int node, int label, const SearchBudget& budget) {
    if (node < 0 || node >= g.order()) throw std::invalid_argument("attractNode: node out of range");
    if (label < 0 || label > g.size()) throw std::invalid_argument("attractNode: label outside 0..q");
    GracefulConstraints cons;
    cons.fixedNodeLabels = {{node, label}};
    return attractWith(g, cons, budget);
}

AttractResult attractEdge(const Graph& g, std::pair<int, int> edge, int label,
                          const SearchBudget& budget) {
    if (label < 1 || label > g.size()) throw std::invalid_argument("attractEdge: label outside 1..q");
    GracefulConstraints cons;
    cons.forcedEdgeLabel = {{edge, label}};
    return attractWith(g, cons, budget);
}

std::string propertyName(Property p) {
    switch (p) {
        case Property::Graceful: return "graceful";
        case Property::Total: return "total";
        case Property::Prime: return "prime";
    }
    return "?";
}

CensusReport censusRun(const std::vector<Graph>& universe, const std::string& universeName,
                       Property property, const SearchBudget& perGraph, int jobs) {
    CensusReport report;
    report.universe = universeName;
    report.property = propertyName(property);
    report.entries.resize(universe.size());
    auto work = [&](size_t i) {
        auto key = canonicalForm(universe[i]);
        Graph rep(key.order, key.edges);  // solve the canonical representative
        SearchOutcome oc;
        switch (property) {
            case Property::Graceful: oc = findGraceful(rep, perGraph); break;
            case Property::Total: oc = findTotal(rep, perGraph); break;
            case Property::Prime: oc = findPrime(rep, perGraph); break;
        }
        report.entries[i] = {key.g6, oc.status, oc.witness, oc.stats.nodes};
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < universe.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < universe.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.key < b.key; });
    for (auto& e : report.entries) {
        if (e.status == SearchOutcome::Status::Found) ++report.found;
        else if (e.status == SearchOutcome::Status::Exhausted) ++report.exhausted;
        else ++report.budgetExceeded;
    }
    return report;
}

}  // namespace labelkit
