#include "labelkit/primegraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "labelkit/canonical.hpp"
#include "labelkit/enumerate.hpp"

namespace labelkit {

namespace {

bool isPrimeInt(int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

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

std::vector<int> primesUpTo(int n) {
    std::vector<int> out;
    for (int x = 2; x <= n; ++x)
        if (isPrimeInt(x)) out.push_back(x);
    return out;
}

template <typename T>
std::string show(const std::vector<T>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

}  // namespace

SPRecord buildSP(int n) {
    if (n < 1) throw std::invalid_argument("buildSP: n >= 1");
    SPRecord r;
    r.n = n;
    EdgeList e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (std::gcd(u, v) == 1) e.push_back({u - 1, v - 1});
    r.graph = Graph(n, std::move(e));
    for (int v = 2; v <= n; ++v) r.edgeCountFormula += totient(v);
    if (n <= 40) {
        auto inv = invariantNumbers(r.graph);
        r.omega = inv.omega;
        r.beta0 = inv.beta0;
        r.minDegree = inv.minDeg;
        r.maxDegree = inv.maxDeg;
    }
    std::set<int> degrees;
    for (int v = 0; v < n; ++v) {
        degrees.insert(r.graph.degree(v));
        if (r.graph.degree(v) == n - 1) r.fullDegreeLabels.push_back(v + 1);
    }
    r.distinctDegreeCount = static_cast<int>(degrees.size());
    return r;
}

std::vector<SpClaim> spAudit(int n) {
    if (n < 1 || n > 40) throw std::invalid_argument("spAudit: 1 <= n <= 40");
    auto sp = buildSP(n);
    const Graph& g = sp.graph;
    std::vector<SpClaim> out;
    auto add = [&](std::string claim, std::string computed, std::string paper, bool match) {
        out.push_back({std::move(claim), std::move(computed), std::move(paper), match});
    };

    add("edge count m = sum of phi(2..n)", std::to_string(g.size()),
        std::to_string(sp.edgeCountFormula), g.size() == sp.edgeCountFormula);

    auto primes = primesUpTo(n);
    int primesBelow = 0;
    for (int p : primes)
        if (p < n) ++primesBelow;
    add("clique number = |primes <= n| + 1 (corrected reading)", std::to_string(sp.omega),
        std::to_string(primes.size() + 1), sp.omega == static_cast<int>(primes.size()) + 1);
    add("clique number vs paper's strict reading |primes < n| + 1", std::to_string(sp.omega),
        std::to_string(primesBelow + 1), sp.omega == primesBelow + 1);

    add("independence number = floor(n/2)", std::to_string(sp.beta0), std::to_string(n / 2),
        sp.beta0 == n / 2);

    // full-degree set: {1} plus primes x with 2x > n (corrected reading)
    std::vector<int> corrected = {1}, paperReading = {1};
    for (int p : primes) {
        if (2 * p > n) corrected.push_back(p);
        if (2 * p < n) paperReading.push_back(p);
    }
    std::sort(corrected.begin(), corrected.end());
    std::sort(paperReading.begin(), paperReading.end());
    add("full-degree set = {1} u {prime x : 2x > n} (corrected reading)",
        show(sp.fullDegreeLabels), show(corrected), sp.fullDegreeLabels == corrected);
    add("full-degree set vs paper's '2x < n' reading", show(sp.fullDegreeLabels),
        show(paperReading), sp.fullDegreeLabels == paperReading);

    {
        bool all = true;
        for (int p : primes)
            if (g.degree(p - 1) != n - n / p) all = false;
        add("d(p) = n - floor(n/p) for every prime p <= n", all ? "holds" : "fails", "holds", all);
    }

    {
        // N(p^a) = N(p) for prime powers, N(p1 p2) = N(p1) & N(p2) for products
        bool powers = true, products = true;
        for (int p : primes)
            for (long pa = static_cast<long>(p) * p; pa <= n; pa *= p)
                if (g.neighborMask(static_cast<int>(pa) - 1) !=
                    (g.neighborMask(p - 1) & ~(1ull << (pa - 1)) & ~(1ull << (p - 1)))) {
                    // neighborhoods as coprime sets agree except for the nodes themselves
                    uint64_t a = g.neighborMask(static_cast<int>(pa) - 1);
                    uint64_t b = g.neighborMask(p - 1);
                    uint64_t self = (1ull << (pa - 1)) | (1ull << (p - 1));
                    if ((a & ~self) != (b & ~self)) powers = false;
                }
        for (size_t i = 0; i < primes.size(); ++i)
            for (size_t j = i + 1; j < primes.size(); ++j) {
                long prod = static_cast<long>(primes[i]) * primes[j];
                if (prod > n) continue;
                uint64_t expect = g.neighborMask(primes[i] - 1) & g.neighborMask(primes[j] - 1);
                if (g.neighborMask(static_cast<int>(prod) - 1) != expect) products = false;
            }
        add("N(p^a) = N(p) away from the two nodes", powers ? "holds" : "fails", "holds", powers);
        add("N(p1 p2) = N(p1) n N(p2)", products ? "holds" : "fails", "holds", products);
    }

    add("min degree vs paper's formula n - floor(n/2)", std::to_string(sp.minDegree),
        std::to_string(n - n / 2), sp.minDegree == n - n / 2);
    {
        // the largest primorial <= n should be a minimum-degree node
        long primorial = 1;
        for (int p : primes) {
            if (primorial * p > n) break;
            primorial *= p;
        }
        bool ok = primorial > 1 ? g.degree(static_cast<int>(primorial) - 1) == sp.minDegree
                                : n <= 2;
        add("min degree attained at the largest primorial <= n",
            primorial > 1 ? std::to_string(g.degree(static_cast<int>(primorial) - 1)) : "n/a",
            std::to_string(sp.minDegree), ok);
    }

    add("distinct degree count (paper's tau formula is circular as printed; computed only)",
        std::to_string(sp.distinctDegreeCount), "unverifiable", true);
    return out;
}

std::vector<Table2Row> table2Compare(int maxN) {
    if (maxN < 1 || maxN > 20) throw std::invalid_argument("table2Compare: 1 <= maxN <= 20");
    static const long paperRow[20] = {0,  1,  3,  5,  9,  11, 17,  21,  27,  31,
                                      41, 45, 57, 63, 81, 89, 105, 111, 129, 137};
    std::vector<Table2Row> rows;
    long cum = 0;
    for (int n = 1; n <= maxN; ++n) {
        if (n >= 2) cum += totient(n);
        rows.push_back({n, cum, paperRow[n - 1], cum == paperRow[n - 1]});
    }
    return rows;
}

TreeCompleteResult treeCompleteCheck(int n, const SearchBudget& budget) {
    if (n < 1 || n > 15) throw std::invalid_argument("treeCompleteCheck: 1 <= n <= 15");
    TreeCompleteResult res;
    for (auto& t : enumerateGraphs(GraphKind::Trees, n)) {
        ++res.treesChecked;
        auto oc = findPrime(t, budget);
        if (oc.status == SearchOutcome::Status::BudgetExceeded) {
            ++res.budgetExceeded;
            continue;
        }
        if (!oc.found()) {
            res.verdict = false;
            res.failingTree = t;
            return res;
        }
    }
    if (res.budgetExceeded) res.verdict = false;
    return res;
}

std::vector<InferenceStep> inferenceChain(const std::vector<int>& base, int maxN) {
    std::set<int> verified(base.begin(), base.end());
    std::vector<InferenceStep> steps;
    for (int n : base) steps.push_back({n, "base"});
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n = 1; n <= maxN; ++n) {
            if (!verified.count(n)) continue;
            auto derive = [&](int m, const std::string& why) {
                if (m <= maxN && !verified.count(m)) {
                    verified.insert(m);
                    steps.push_back({m, why});
                    changed = true;
                }
            };
            if (isPrimeInt(n + 1)) {
                derive(n + 1, "from " + std::to_string(n) + ": n+1 prime");
                derive(n + 2, "from " + std::to_string(n) + ": n+1 prime");
            }
            if (isPrimeInt(n + 1) && isPrimeInt(n + 3)) {
                for (int m = n + 1; m <= n + 5; ++m)
                    derive(m, "from " + std::to_string(n) + ": twin primes n+1, n+3");
            }
        }
    }
    std::sort(steps.begin(), steps.end(),
              [](const InferenceStep& a, const InferenceStep& b) { return a.order < b.order; });
    return steps;
}

namespace {

int muEdgeCeiling(int n, bool connectedOnly) {
    // paper's constructive upper bounds (Thm 10.3 / 10.5 and the small cases)
    if (connectedOnly) {
        if (n == 4) return 6;
        if (n == 5) return 10;
        if (n == 6) return 7;
        if (n == 7) return 10;
        return n % 2 == 0 ? n + 1 : n + 2;
    }
    if (n <= 5) return muEdgeCeiling(n, true);
    if (n == 6) return 6;
    if (n == 7) return 9;
    return n;
}

}  // namespace

MuResult muCompute(int n, bool connectedOnly, const SearchBudget& budget) {
    if (n < 1 || n > 7) throw std::invalid_argument("muCompute: 1 <= n <= 7");
    MuResult res;
    res.n = n;
    res.connectedOnly = connectedOnly;
    int ceiling = muEdgeCeiling(n, connectedOnly) + 1;
    ceiling = std::min(ceiling, n * (n - 1) / 2);
    auto universe = enumerateGraphs(connectedOnly ? GraphKind::ConnectedGraphs : GraphKind::AllGraphs,
                                    n, {.maxEdges = ceiling});
    std::map<int, std::vector<std::string>> nonPrimeBySize;
    for (auto& g : universe) {
        if (findPrime(g, budget).found()) continue;
        nonPrimeBySize[g.size()].push_back(canonicalForm(g).g6);
    }
    if (nonPrimeBySize.empty()) return res;  // undefined: everything in range is prime
    res.defined = true;
    res.value = nonPrimeBySize.begin()->first;
    res.witnesses = nonPrimeBySize.begin()->second;
    std::sort(res.witnesses.begin(), res.witnesses.end());
    return res;
}

std::vector<Graph> eMinimalNonPrime(int n, const SearchBudget& budget) {
    if (n < 1 || n > 6) throw std::invalid_argument("eMinimalNonPrime: 1 <= n <= 6");
    std::vector<Graph> out;
    for (auto& g : enumerateGraphs(GraphKind::AllGraphs, n)) {
        if (findPrime(g, budget).found()) continue;
        bool minimal = true;
        for (auto [u, v] : g.edges())
            if (!findPrime(g.minusEdge(u, v), budget).found()) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(g);
    }
    return out;
}

KrsAuditResult krsAudit(int r, int s, const SearchBudget& budget) {
    if (r < 1 || s < 1 || r + s > 14) throw std::invalid_argument("krsAudit: r+s <= 14");
    KrsAuditResult res;
    res.primeVerdict = findPrime(generate("completeBipartite", {r, s}), budget).found();
    int primesBelow = 0;
    for (int x = 2; x < r + s; ++x)
        if (isPrimeInt(x)) ++primesBelow;
    res.paperFormulaVerdict = std::min(r, s) < primesBelow + 1;
    res.agree = res.primeVerdict == res.paperFormulaVerdict;
    return res;
}

}  // namespace labelkit
