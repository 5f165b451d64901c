#include "labelkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace labelkit {

namespace {

std::pair<int, int> norm(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

}  // namespace

Graph::Graph(int order, EdgeList edges) : p_(order) {
    if (order < 1) throw std::invalid_argument("graph order must be >= 1");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        std::tie(u, v) = norm(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(p_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    if (p_ <= 64) {
        bits_.assign(p_, 0);
        for (auto [u, v] : edges_) {
            bits_[u] |= 1ull << v;
            bits_[v] |= 1ull << u;
        }
    }
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (!bits_.empty()) return (bits_[u] >> v) & 1ull;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<int> Graph::degreeSequence() const {
    std::vector<int> d(p_);
    for (int i = 0; i < p_; ++i) d[i] = degree(i);
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::vector<int> Graph::componentIds() const {
    std::vector<int> comp(p_, -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < p_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

bool Graph::connected() const {
    auto comp = componentIds();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Graph Graph::plusEdge(int u, int v) const {
    EdgeList e = edges_;
    e.push_back(norm(u, v));
    return Graph(p_, std::move(e));
}

Graph Graph::minusEdge(int u, int v) const {
    EdgeList e;
    auto target = norm(u, v);
    bool seen = false;
    for (auto& ed : edges_) {
        if (ed == target) {
            seen = true;
            continue;
        }
        e.push_back(ed);
    }
    if (!seen) throw std::invalid_argument("minusEdge: edge not present");
    return Graph(p_, std::move(e));
}

Graph Graph::plusVertex(const std::vector<int>& nbrs) const {
    EdgeList e = edges_;
    for (int w : nbrs) e.push_back({w, p_});
    return Graph(p_ + 1, std::move(e));
}

Graph Graph::edgeSubgraph(const std::vector<int>& edgeIdx, std::vector<int>* nodeMap) const {
    std::vector<int> touched;
    for (int i : edgeIdx) {
        touched.push_back(edges_[i].first);
        touched.push_back(edges_[i].second);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<int> idx(p_, -1);
    for (size_t i = 0; i < touched.size(); ++i) idx[touched[i]] = static_cast<int>(i);
    EdgeList e;
    for (int i : edgeIdx) e.push_back({idx[edges_[i].first], idx[edges_[i].second]});
    if (nodeMap) *nodeMap = touched;
    return Graph(static_cast<int>(touched.size()), std::move(e));
}

Graph makeGraph(int order, const EdgeList& edges) { return Graph(order, edges); }

namespace {

Graph generalizedPetersen(int n, int k) {
    EdgeList e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});       // outer cycle
        e.push_back({i, n + i});             // spoke
        e.push_back({n + i, n + (i + k) % n});  // inner star polygon
    }
    return Graph(2 * n, std::move(e));
}

Graph icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({0, 1 + i});
        e.push_back({11, 6 + i});
        e.push_back({1 + i, 1 + (i + 1) % 5});
        e.push_back({6 + i, 6 + (i + 1) % 5});
        e.push_back({1 + i, 6 + i});
        e.push_back({1 + i, 6 + (i + 1) % 5});
    }
    return Graph(12, std::move(e));
}

Graph completeGraph(int n) {
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph familyH(int l, int m, int n, bool cartesian) {
    // m disjoint copies of K_l, combined with the edgeless graph on n nodes
    Graph mkl(1, {});
    {
        EdgeList e;
        for (int c = 0; c < m; ++c)
            for (int u = 0; u < l; ++u)
                for (int v = u + 1; v < l; ++v) e.push_back({c * l + u, c * l + v});
        mkl = Graph(m * l, std::move(e));
    }
    if (!cartesian) return joinGraphs(mkl, Graph(n, {}));
    // Cartesian product with edgeless factor = n disjoint copies
    Graph out = mkl;
    for (int i = 1; i < n; ++i) out = disjointUnion(out, mkl);
    return out;
}

}  // namespace

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family " + family + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (family == "complete") {
        need(1);
        if (params[0] < 1) throw std::invalid_argument("complete: n >= 1");
        return completeGraph(params[0]);
    }
    if (family == "cycle") {
        need(1);
        int n = params[0];
        if (n < 3) throw std::invalid_argument("cycle: n >= 3");
        EdgeList e;
        for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
        return Graph(n, std::move(e));
    }
    if (family == "pathEdges") {
        need(1);
        int n = params[0];
        if (n < 1) throw std::invalid_argument("pathEdges: n >= 1");
        EdgeList e;
        for (int i = 0; i < n; ++i) e.push_back({i, i + 1});
        return Graph(n + 1, std::move(e));
    }
    if (family == "star") {
        need(1);
        int n = params[0];
        if (n < 1) throw std::invalid_argument("star: n >= 1");
        EdgeList e;
        for (int i = 1; i <= n; ++i) e.push_back({0, i});
        return Graph(n + 1, std::move(e));
    }
    if (family == "completeBipartite") {
        need(2);
        int r = params[0], s = params[1];
        if (r < 1 || s < 1) throw std::invalid_argument("completeBipartite: r,s >= 1");
        EdgeList e;
        for (int u = 0; u < r; ++u)
            for (int v = 0; v < s; ++v) e.push_back({u, r + v});
        return Graph(r + s, std::move(e));
    }
    if (family == "wheel") {
        need(1);
        int n = params[0];
        if (n < 3) throw std::invalid_argument("wheel: n >= 3");
        return joinGraphs(Graph(1, {}), generate("cycle", {n}));
    }
    if (family == "prism") {
        need(1);
        int n = params[0];
        if (n < 3) throw std::invalid_argument("prism: n >= 3");
        return generalizedPetersen(n, 1);
    }
    if (family == "hypercube") {
        need(1);
        int d = params[0];
        if (d < 1 || d > 6) throw std::invalid_argument("hypercube: 1 <= d <= 6");
        EdgeList e;
        for (int u = 0; u < (1 << d); ++u)
            for (int b = 0; b < d; ++b)
                if (!(u & (1 << b))) e.push_back({u, u | (1 << b)});
        return Graph(1 << d, std::move(e));
    }
    if (family == "petersen") {
        need(0);
        return generalizedPetersen(5, 2);
    }
    if (family == "platonic") {
        need(1);
        switch (params[0]) {
            case 1: return completeGraph(4);
            case 2: return generate("hypercube", {3});
            case 3: {  // octahedron = K_{2,2,2}
                EdgeList e;
                for (int u = 0; u < 6; ++u)
                    for (int v = u + 1; v < 6; ++v)
                        if (v != u + 3 || u >= 3) e.push_back({u, v});
                return Graph(6, std::move(e));
            }
            case 4: return generalizedPetersen(10, 2);
            case 5: return icosahedron();
            default: throw std::invalid_argument("platonic: index 1..5");
        }
    }
    if (family == "tetrahedron") return generate("platonic", {1});
    if (family == "cube") return generate("platonic", {2});
    if (family == "octahedron") return generate("platonic", {3});
    if (family == "dodecahedron") return generate("platonic", {4});
    if (family == "icosahedron") return generate("platonic", {5});
    if (family == "H") {
        if (params.size() != 3 && params.size() != 4)
            throw std::invalid_argument("H expects parameters l,m,n[,cartesian]");
        int l = params[0], m = params[1], n = params[2];
        bool cart = params.size() == 4 && params[3] != 0;
        if (l < 1 || m < 1 || n < 1) throw std::invalid_argument("H: l,m,n >= 1");
        return familyH(l, m, n, cart);
    }
    if (family == "Bnn") {
        need(1);
        int n = params[0];
        if (n < 2) throw std::invalid_argument("Bnn: n >= 2");
        EdgeList e;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) e.push_back({u, n + v});
        return Graph(2 * n, std::move(e));
    }
    throw std::invalid_argument("unknown family: " + family);
}

Graph disjointUnion(const Graph& a, const Graph& b) {
    EdgeList e = a.edges();
    for (auto [u, v] : b.edges()) e.push_back({u + a.order(), v + a.order()});
    return Graph(a.order() + b.order(), std::move(e));
}

Graph joinGraphs(const Graph& a, const Graph& b) {
    EdgeList e = a.edges();
    for (auto [u, v] : b.edges()) e.push_back({u + a.order(), v + a.order()});
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) e.push_back({u, a.order() + v});
    return Graph(a.order() + b.order(), std::move(e));
}

Graph coalesce(const Graph& a, int u, const Graph& b, int v) {
    if (u < 0 || u >= a.order() || v < 0 || v >= b.order())
        throw std::invalid_argument("coalesce: node out of range");
    // b's nodes map to a.order()..; v maps onto u; later b-nodes shift down by one
    std::vector<int> map(b.order());
    int next = a.order();
    for (int i = 0; i < b.order(); ++i) map[i] = (i == v) ? u : next++;
    EdgeList e = a.edges();
    for (auto [x, y] : b.edges()) e.push_back({map[x], map[y]});
    return Graph(a.order() + b.order() - 1, std::move(e));
}

std::vector<std::pair<uint32_t, int>> cycleInventory(const Graph& g) {
    if (g.order() > 12) throw std::invalid_argument("cycleInventory: order cap is 12");
    constexpr size_t kCap = 2'000'000;
    std::vector<std::pair<uint32_t, int>> out;
    int p = g.order();
    std::vector<int> path;
    std::vector<bool> onPath(p, false);
    // each cycle is generated once: smallest node first, second node < last node
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) {
                    uint32_t mask = 0;
                    for (int x : path) mask |= 1u << x;
                    out.push_back({mask, static_cast<int>(path.size())});
                    if (out.size() > kCap) throw std::runtime_error("cycleInventory: cycle count cap exceeded");
                }
                continue;
            }
            if (w <= start || onPath[w]) continue;
            onPath[w] = true;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            onPath[w] = false;
        }
    };
    for (int s = 0; s < p; ++s) {
        path = {s};
        onPath.assign(p, false);
        onPath[s] = true;
        dfs(dfs, s, s);
    }
    return out;
}

GraphClassRecord classify(const Graph& g) {
    GraphClassRecord r;
    r.connected = g.connected();
    int p = g.order(), q = g.size();
    r.tree = r.connected && q == p - 1;
    r.unicyclic = r.connected && q == p;
    r.degreeSequence = g.degreeSequence();
    r.qMod4 = ((q % 4) + 4) % 4;
    bool allEven = true;
    for (int v = 0; v < p; ++v)
        if (g.degree(v) % 2) allEven = false;
    r.eulerian = r.connected && allEven;
    // bipartition by BFS 2-coloring, color 0 on the least node of each component
    std::vector<int> color(p, -1);
    bool bip = true;
    std::vector<int> stack;
    for (int s = 0; s < p && bip; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty() && bip) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    bip = false;
                    break;
                }
            }
        }
    }
    r.bipartite = bip;
    if (bip) {
        for (int v = 0; v < p; ++v) (color[v] == 0 ? r.partA : r.partB).push_back(v);
    }
    if (p <= 12) {
        std::vector<int> lens;
        for (auto& [mask, len] : cycleInventory(g)) lens.push_back(len);
        std::sort(lens.begin(), lens.end());
        r.cycleLengths = std::move(lens);
    }
    return r;
}

namespace {

// branch and bound max clique over <=64-bit adjacency rows, greedy coloring bound
int maxCliqueSize(const std::vector<uint64_t>& adj, int n) {
    int best = 0;
    auto colorBound = [&](uint64_t cand) {
        uint64_t left = cand;
        int colors = 0;
        while (left) {
            ++colors;
            uint64_t avail = left;
            while (avail) {
                int v = std::countr_zero(avail);
                left &= ~(1ull << v);
                avail &= ~(1ull << v);
                avail &= ~adj[v];
            }
        }
        return colors;
    };
    auto rec = [&](auto&& self, uint64_t cand, int size) -> void {
        if (size > best) best = size;
        if (cand == 0) return;
        if (size + colorBound(cand) <= best) return;
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= ~(1ull << v);
            self(self, cand & adj[v], size + 1);
        }
    };
    uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    rec(rec, all, 0);
    return best;
}

}  // namespace

InvariantNumbers invariantNumbers(const Graph& g) {
    int p = g.order();
    if (p > 64) throw std::invalid_argument("invariantNumbers: order cap is 64");
    InvariantNumbers r;
    r.minDeg = p ? g.degree(0) : 0;
    r.maxDeg = 0;
    for (int v = 0; v < p; ++v) {
        r.minDeg = std::min(r.minDeg, g.degree(v));
        r.maxDeg = std::max(r.maxDeg, g.degree(v));
    }
    std::vector<uint64_t> adj(p), coadj(p);
    uint64_t all = (p == 64) ? ~0ull : ((1ull << p) - 1);
    for (int v = 0; v < p; ++v) {
        adj[v] = g.neighborMask(v);
        coadj[v] = all & ~adj[v] & ~(1ull << v);
    }
    r.omega = maxCliqueSize(adj, p);
    r.beta0 = maxCliqueSize(coadj, p);  // independent set = clique in complement
    return r;
}

}  // namespace labelkit
