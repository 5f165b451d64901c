#include "labelkit/conditions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "labelkit/canonical.hpp"

namespace labelkit {

namespace {

using nlohmann::json;

bool allDegreesEven(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2) return false;
    return true;
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

// count of values in {1..q} congruent to r (mod n)
int residueCount(int q, int r, int n) {
    if (r == 0) return q / n;
    if (r > q) return 0;
    return (q - r) / n + 1;
}

// Edges between residue classes at distance d can carry labels congruent to
// d or n-d (mod n), so the distances {d, n-d} share one pooled label budget.
std::vector<int> pooledBounds(int q, int n) {
    std::vector<int> bounds(n / 2 + 1, 0);
    for (int r = 0; r < n; ++r) bounds[std::min(r, n - r)] += residueCount(q, r, n);
    return bounds;
}

json classesWitness(const std::vector<int>& assign, int n) {
    json classes = json::array();
    for (int r = 0; r < n; ++r) {
        json c = json::array();
        for (size_t v = 0; v < assign.size(); ++v)
            if (assign[v] == r) c.push_back(v);
        classes.push_back(c);
    }
    return classes;
}

// Euler totient
int totient(int x) {
    int result = x, m = x;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

int primesUpTo(int n) {
    int cnt = 0;
    for (int x = 2; x <= n; ++x) {
        bool prime = true;
        for (int d = 2; d * d <= x; ++d)
            if (x % d == 0) prime = false;
        if (prime) ++cnt;
    }
    return cnt;
}

Graph superPrimeGraph(int n) {
    EdgeList e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (std::gcd(u, v) == 1) e.push_back({u - 1, v - 1});
    return Graph(n, std::move(e));
}

}  // namespace

std::string certVerdictName(CertVerdict v) {
    switch (v) {
        case CertVerdict::Violated: return "violated";
        case CertVerdict::Satisfied: return "satisfied";
        case CertVerdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

NaryVerify naryPartitionVerify(const Graph& g, const Labeling& phi, int n) {
    if (n < 2) throw std::invalid_argument("naryPartitionVerify: n >= 2");
    NaryVerify r;
    r.classEdges.assign(n / 2 + 1, 0);
    r.classBounds = pooledBounds(g.size(), n);
    for (auto [u, v] : g.edges()) {
        int d = std::abs(phi[u] % n - phi[v] % n);
        ++r.classEdges[std::min(d, n - d)];
    }
    for (size_t k = 0; k < r.classEdges.size(); ++k)
        if (r.classEdges[k] > r.classBounds[k]) r.ok = false;
    return r;
}

namespace {

Certificate certBinaryPartition(const Graph& g) {
    Certificate c{"binaryPartition", CertVerdict::Violated, {}};
    int p = g.order(), q = g.size();
    if (p > 14) throw std::invalid_argument("binaryPartition: order cap is 14");
    int target = (q + 1) / 2;
    std::set<int> achievable;
    for (uint32_t S = 0; S < (1u << (p - 1)); ++S) {
        // node p-1 fixed outside S; swapping classes keeps the cross count
        int cross = 0;
        for (auto [u, v] : g.edges()) {
            bool su = u < p - 1 && (S & (1u << u));
            bool sv = v < p - 1 && (S & (1u << v));
            if (su != sv) ++cross;
        }
        achievable.insert(cross);
        if (cross == target) {
            c.verdict = CertVerdict::Satisfied;
            json odd = json::array(), even = json::array();
            for (int v = 0; v < p; ++v)
                (v < p - 1 && (S & (1u << v)) ? odd : even).push_back(v);
            c.witness = {{"target", target}, {"oddClass", odd}, {"evenClass", even}};
            return c;
        }
    }
    c.witness = {{"target", target}, {"achievableCrossCounts", json(achievable)}};
    return c;
}

Certificate certNaryPartition(const Graph& g, int n) {
    Certificate c{"naryPartition", CertVerdict::Violated, {}};
    int p = g.order(), q = g.size();
    if (p > 14) throw std::invalid_argument("naryPartition: order cap is 14");
    if (n < 2 || n > 5) throw std::invalid_argument("naryPartition: 2 <= n <= 5");
    auto bounds = pooledBounds(q, n);
    std::vector<int> assign(p, -1), counts(n / 2 + 1, 0);
    assign[0] = 0;  // pooled counts are shift/negation invariant
    bool found = false;
    auto rec = [&](auto&& self, int v) -> void {
        if (found) return;
        if (v == p) {
            found = true;
            return;
        }
        for (int r = 0; r < n && !found; ++r) {
            bool ok = true;
            std::vector<int> touched;
            for (int w : g.neighbors(v)) {
                if (assign[w] < 0) continue;  // only already-assigned neighbors
                int d = std::abs(r - assign[w]);
                int k = std::min(d, n - d);
                if (++counts[k] > bounds[k]) ok = false;
                touched.push_back(k);
                if (!ok) break;
            }
            if (ok) {
                assign[v] = r;
                self(self, v + 1);
                if (found) return;
                assign[v] = -1;
            }
            for (int k : touched) --counts[k];
        }
    };
    if (p == 1) found = true;
    else rec(rec, 1);
    if (found) {
        c.verdict = CertVerdict::Satisfied;
        c.witness = {{"n", n}, {"classes", classesWitness(assign, n)}};
    } else {
        c.witness = {{"n", n}, {"pooledBounds", json(bounds)}};
    }
    return c;
}

}  // namespace

Certificate certify(const Graph& g, const std::string& rule, const nlohmann::json& params) {
    int p = g.order(), q = g.size();
    if (rule == "rosaGolomb") {
        Certificate c{rule, CertVerdict::Inapplicable, {}};
        bool eul = g.connected() && allDegreesEven(g);
        if (!eul) {
            c.witness = {{"reason", "graph is not eulerian"}};
            return c;
        }
        c.witness = {{"q", q}, {"qMod4", mod4(q)}};
        c.verdict = (mod4(q) == 1 || mod4(q) == 2) ? CertVerdict::Violated : CertVerdict::Satisfied;
        return c;
    }
    if (rule == "binaryPartition") return certBinaryPartition(g);
    if (rule == "naryPartition") {
        int n = params.contains("n") ? params.at("n").get<int>() : 3;
        return certNaryPartition(g, n);
    }
    if (rule == "joinEulerianNonSupergraceful") {
        Certificate c{rule, CertVerdict::Inapplicable, {}};
        // K1+G is eulerian iff p is even and every degree of G is odd
        bool apexEulerian = (p % 2 == 0);
        for (int v = 0; v < p && apexEulerian; ++v)
            if (g.degree(v) % 2 == 0) apexEulerian = false;
        if (!apexEulerian) {
            c.witness = {{"reason", "K1+G is not eulerian"}};
            return c;
        }
        int qh = q + p;
        c.witness = {{"joinEdges", qh}, {"qMod4", mod4(qh)}};
        c.verdict = (mod4(qh) == 1 || mod4(qh) == 2) ? CertVerdict::Violated : CertVerdict::Satisfied;
        return c;
    }
    if (rule == "primeIndependence") {
        auto inv = invariantNumbers(g);
        Certificate c{rule, inv.beta0 < p / 2 ? CertVerdict::Violated : CertVerdict::Satisfied, {}};
        c.witness = {{"beta0", inv.beta0}, {"bound", p / 2}};
        return c;
    }
    if (rule == "primeClique") {
        auto inv = invariantNumbers(g);
        int bound = primesUpTo(p) + 1;
        Certificate c{rule, inv.omega > bound ? CertVerdict::Violated : CertVerdict::Satisfied, {}};
        c.witness = {{"omega", inv.omega}, {"bound", bound}};
        return c;
    }
    if (rule == "primeEdgeCount") {
        int m = 0;
        for (int v = 2; v <= p; ++v) m += totient(v);
        Certificate c{rule, q > m ? CertVerdict::Violated : CertVerdict::Satisfied, {}};
        c.witness = {{"q", q}, {"superPrimeEdges", m}};
        return c;
    }
    if (rule == "primeMinDegree") {
        Graph sp = superPrimeGraph(p);
        int spMin = p;
        for (int v = 0; v < p; ++v) spMin = std::min(spMin, sp.degree(v));
        int gMin = p;
        for (int v = 0; v < p; ++v) gMin = std::min(gMin, g.degree(v));
        Certificate c{rule, gMin > spMin ? CertVerdict::Violated : CertVerdict::Satisfied, {}};
        c.witness = {{"minDegree", gMin}, {"superPrimeMinDegree", spMin}};
        return c;
    }
    if (rule == "allCyclesMod4Zero") {
        if (p > 12) throw std::invalid_argument("allCyclesMod4Zero: order cap is 12");
        json offenders = json::array();
        for (auto& [mask, len] : cycleInventory(g))
            if (len % 4 != 0) offenders.push_back(len);
        Certificate c{rule, offenders.empty() ? CertVerdict::Satisfied : CertVerdict::Violated, {}};
        c.witness = {{"offendingCycleLengths", offenders}};
        return c;
    }
    throw std::invalid_argument("unknown certificate rule: " + rule);
}

std::vector<PatternHit> forbiddenPatternScan(const Graph& g) {
    if (g.order() > 12) throw std::invalid_argument("forbiddenPatternScan: order cap is 12");
    auto cycles = cycleInventory(g);
    if (cycles.size() > 20000) throw std::runtime_error("forbiddenPatternScan: cycle cap exceeded");
    std::vector<PatternHit> hits;
    for (auto& [mask, len] : cycles)
        if (len % 4 == 1 || len % 4 == 2) hits.push_back({1, {len}, {mask}});
    std::vector<size_t> threes, zeros;
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].second % 4 == 3) threes.push_back(i);
        if (cycles[i].second % 4 == 0) zeros.push_back(i);
    }
    for (size_t a = 0; a < threes.size(); ++a)
        for (size_t b = a + 1; b < threes.size(); ++b) {
            auto [ma, la] = cycles[threes[a]];
            auto [mb, lb] = cycles[threes[b]];
            if (std::popcount(ma & mb) == 1) hits.push_back({2, {la, lb}, {ma, mb}});
        }
    for (size_t z : zeros) {
        auto [mz, lz] = cycles[z];
        for (size_t a = 0; a < threes.size(); ++a)
            for (size_t b = a + 1; b < threes.size(); ++b) {
                auto [ma, la] = cycles[threes[a]];
                auto [mb, lb] = cycles[threes[b]];
                if ((ma & mb) != 0) continue;
                if (std::popcount(mz & ma) == 1 && std::popcount(mz & mb) == 1)
                    hits.push_back({3, {lz, la, lb}, {mz, ma, mb}});
            }
    }
    return hits;
}

int thirdCycleMod4(int m, int n, int l) {
    if (l < 1 || m < 3 || n < 3) throw std::invalid_argument("thirdCycleMod4: l >= 1, m,n >= 3");
    return mod4(m + n - 2 * (l - 1));
}

std::vector<Table1Row> table1Audit() {
    // Table 1 as printed: rows m mod 4, first column group headed "0 or 2",
    // second group headed "1 or 3", sub-columns n mod 4
    static const int table[4][2][4] = {
        {{0, 1, 2, 3}, {2, 3, 0, 1}},
        {{1, 2, 3, 0}, {3, 0, 1, 2}},
        {{2, 3, 0, 1}, {0, 1, 2, 3}},
        {{3, 0, 1, 2}, {1, 2, 3, 0}},
    };
    std::vector<Table1Row> rows;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int l = 1; l <= 4; ++l) {
                Table1Row r;
                r.mRes = m;
                r.nRes = n;
                r.lRes = l % 4;
                r.degenerate = (l == 1);
                int group = (r.lRes == 0 || r.lRes == 2) ? 0 : 1;
                r.tableEntry = table[m][group][n];
                r.nodeReading = mod4(m + n - 2 * (l - 1));
                r.edgeReading = mod4(m + n - 2 * l);
                r.nodeMatches = (r.nodeReading == r.tableEntry);
                r.edgeMatches = (r.edgeReading == r.tableEntry);
                rows.push_back(r);
            }
    return rows;
}

namespace {

SubgraphAudit subgraphSweep(const Graph& g, const SearchBudget& budget, bool properOnly) {
    if (g.order() > 8 || g.size() > 12)
        throw std::invalid_argument("subgraph audit caps: order <= 8, size <= 12");
    SubgraphAudit res;
    res.verdict = true;
    int q = g.size();
    std::map<std::string, Graph> classes;
    for (uint32_t mask = 1; mask < (1u << q); ++mask) {
        if (properOnly && mask == (1u << q) - 1) continue;
        std::vector<int> idx;
        for (int i = 0; i < q; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        Graph sub = g.edgeSubgraph(idx);
        if (!sub.connected()) continue;
        classes.emplace(canonicalForm(sub).g6, std::move(sub));
    }
    res.subgraphClasses = classes.size();
    for (auto& [key, sub] : classes) {
        auto oc = findGraceful(sub, budget);
        if (!oc.found()) {
            res.verdict = false;
            res.failingSubgraph = sub;
            return res;
        }
    }
    return res;
}

}  // namespace

SubgraphAudit highlyGracefulAudit(const Graph& g, const SearchBudget& budget) {
    return subgraphSweep(g, budget, false);
}

SubgraphAudit criticalAudit(const Graph& g, const SearchBudget& budget) {
    SubgraphAudit res = subgraphSweep(g, budget, true);
    if (!res.verdict) return res;  // some proper connected subgraph is non-graceful
    res.verdict = !findGraceful(g, budget).found();
    return res;
}

}  // namespace labelkit
