#include "labelkit/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace labelkit {

namespace {

void requireTotal(const Graph& g, const Labeling& phi) {
    if (static_cast<int>(phi.size()) != g.order())
        throw std::invalid_argument("labeling does not cover every node");
    for (int v : phi)
        if (v < 0) throw std::invalid_argument("labeling has a negative value");
}

}  // namespace

std::string LabelingKind::name() const {
    switch (kind) {
        case Graceful: return "graceful";
        case Total: return "totalLabeling";
        case Semitotal: return "semitotal";
        case Prime: return "prime";
        case Alpha: return "alpha";
        case EdgeDistinct: return "edgeDistinct";
    }
    return "?";
}

LabelProfile profile(const Graph& g, const Labeling& phi) {
    requireTotal(g, phi);
    LabelProfile p;
    p.q0 = *std::max_element(phi.begin(), phi.end());
    std::set<int> nset(phi.begin(), phi.end());
    p.nodeLabels.assign(nset.begin(), nset.end());
    for (auto [u, v] : g.edges()) p.edgeLabels.push_back(std::abs(phi[u] - phi[v]));
    std::sort(p.edgeLabels.begin(), p.edgeLabels.end());
    p.edgeLabelRepeats =
        std::adjacent_find(p.edgeLabels.begin(), p.edgeLabels.end()) != p.edgeLabels.end();
    std::set<int> eset(p.edgeLabels.begin(), p.edgeLabels.end());
    for (int x = 0; x <= p.q0; ++x)
        if (!nset.count(x)) p.missingNodeLabels.push_back(x);
    for (int x = 1; x <= p.q0; ++x)
        if (!eset.count(x)) p.missingEdgeLabels.push_back(x);
    for (int e : p.missingEdgeLabels) {
        EdgeList pairs;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v) && std::abs(phi[u] - phi[v]) == e) pairs.push_back({u, v});
        p.rSets[e] = std::move(pairs);
    }
    return p;
}

namespace {

bool injective(const Labeling& phi, CheckResult& r) {
    std::map<int, int> seen;
    bool ok = true;
    for (size_t u = 0; u < phi.size(); ++u) {
        auto [it, fresh] = seen.emplace(phi[u], static_cast<int>(u));
        if (!fresh) {
            r.violations.push_back("nodes " + std::to_string(it->second) + " and " + std::to_string(u) +
                                   " share label " + std::to_string(phi[u]));
            ok = false;
        }
    }
    return ok;
}

}  // namespace

CheckResult checkLabeling(const Graph& g, const Labeling& phi, LabelingKind kind) {
    requireTotal(g, phi);
    CheckResult r;
    const int p = g.order(), q = g.size();
    switch (kind.kind) {
        case LabelingKind::Graceful: {
            bool ok = injective(phi, r);
            for (int u = 0; u < p; ++u)
                if (phi[u] > q) {
                    r.violations.push_back("node " + std::to_string(u) + " label " + std::to_string(phi[u]) +
                                           " exceeds q=" + std::to_string(q));
                    ok = false;
                }
            std::vector<int> hit(q + 1, -1);
            for (int i = 0; i < q; ++i) {
                auto [u, v] = g.edges()[i];
                int e = std::abs(phi[u] - phi[v]);
                if (e < 1 || e > q) {
                    r.violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") label " + std::to_string(e) + " outside 1..q");
                    ok = false;
                } else if (hit[e] != -1) {
                    r.violations.push_back("edge label " + std::to_string(e) + " repeats");
                    ok = false;
                } else {
                    hit[e] = i;
                }
            }
            for (int e = 1; e <= q && ok; ++e)
                if (hit[e] == -1) {
                    r.violations.push_back("edge label " + std::to_string(e) + " missing");
                    ok = false;
                }
            r.ok = ok;
            break;
        }
        case LabelingKind::Total:
        case LabelingKind::Semitotal: {
            int slack = kind.kind == LabelingKind::Total ? 0 : kind.slack;
            int bound = p + q + slack;
            bool ok = injective(phi, r);
            std::map<int, std::string> used;
            auto claim = [&](int val, const std::string& what) {
                if (val < 1 || val > bound) {
                    r.violations.push_back(what + " value " + std::to_string(val) + " outside 1.." +
                                           std::to_string(bound));
                    ok = false;
                    return;
                }
                auto [it, fresh] = used.emplace(val, what);
                if (!fresh) {
                    r.violations.push_back("value " + std::to_string(val) + " used by both " + it->second +
                                           " and " + what);
                    ok = false;
                }
            };
            for (int u = 0; u < p; ++u) claim(phi[u], "node " + std::to_string(u));
            for (auto [u, v] : g.edges())
                claim(std::abs(phi[u] - phi[v]), "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            r.ok = ok;  // p+q distinct values inside {1..bound}; slack 0 means exact cover
            break;
        }
        case LabelingKind::Prime: {
            bool ok = true;
            std::vector<bool> seen(p + 1, false);
            for (int u = 0; u < p; ++u) {
                if (phi[u] < 1 || phi[u] > p) {
                    r.violations.push_back("node " + std::to_string(u) + " label outside 1..n");
                    ok = false;
                } else if (seen[phi[u]]) {
                    r.violations.push_back("label " + std::to_string(phi[u]) + " repeats");
                    ok = false;
                } else {
                    seen[phi[u]] = true;
                }
            }
            if (ok)
                for (auto [u, v] : g.edges())
                    if (std::gcd(phi[u], phi[v]) != 1) {
                        r.violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                               ") labels " + std::to_string(phi[u]) + "," +
                                               std::to_string(phi[v]) + " not coprime");
                        ok = false;
                    }
            r.ok = ok;
            break;
        }
        case LabelingKind::Alpha: {
            CheckResult grace = checkLabeling(g, phi, LabelingKind::graceful());
            if (!grace.ok) {
                r = grace;
                r.violations.push_back("alpha requires graceful");
                break;
            }
            if (q == 0) {
                r.ok = true;
                break;
            }
            // boundary k must satisfy min(edge) <= k < max(edge) on every edge;
            // the only candidate is the max over edges of the lower endpoint label
            int k = 0;
            for (auto [u, v] : g.edges()) k = std::max(k, std::min(phi[u], phi[v]));
            bool ok = true;
            for (auto [u, v] : g.edges())
                if (std::max(phi[u], phi[v]) <= k) {
                    r.violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") lies entirely below boundary " + std::to_string(k));
                    ok = false;
                }
            r.ok = ok;
            break;
        }
        case LabelingKind::EdgeDistinct: {
            bool ok = injective(phi, r);
            std::map<int, EdgeList::value_type> seen;
            for (auto [u, v] : g.edges()) {
                int e = std::abs(phi[u] - phi[v]);
                auto [it, fresh] = seen.emplace(e, std::pair{u, v});
                if (!fresh) {
                    r.violations.push_back("edge label " + std::to_string(e) + " repeats");
                    ok = false;
                }
            }
            r.ok = ok;
            break;
        }
    }
    return r;
}

Labeling complementaryLabeling(const Labeling& phi, int base) {
    if (phi.empty()) throw std::invalid_argument("empty labeling");
    int mx = *std::max_element(phi.begin(), phi.end());
    if (base < mx) throw std::invalid_argument("complementary: base below max node label");
    Labeling out(phi.size());
    for (size_t u = 0; u < phi.size(); ++u) out[u] = base - phi[u];
    return out;
}

Labeling shiftSubset(const Labeling& phi, const std::vector<int>& nodes, int c) {
    if (c < 0) throw std::invalid_argument("shiftSubset: c >= 0");
    Labeling out = phi;
    for (int u : nodes) {
        if (u < 0 || u >= static_cast<int>(phi.size()))
            throw std::invalid_argument("shiftSubset: node out of range");
        out[u] += c;
    }
    return out;
}

}  // namespace labelkit
