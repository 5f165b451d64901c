#include "labelkit/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "labelkit/io.hpp"

namespace labelkit {

namespace {

// Canonical labeling search: maximize the column-major upper-triangle bit
// string of the permuted adjacency matrix. Equitable refinement keeps the
// partition sequence isomorphism-invariant (cells split by neighbor counts,
// sub-cells ordered by count descending), so the maximum over the search
// tree is a true canonical form.
struct Canonicalizer {
    int n = 0;
    std::array<uint32_t, 16> adj{};
    std::vector<int> bestPerm;          // position -> vertex
    std::vector<uint8_t> bestBits;
    bool haveBest = false;
    long nodes = 0;

    using Part = std::vector<std::vector<int>>;

    void refine(Part& part) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t s = 0; s < part.size() && !changed; ++s) {
                uint32_t smask = 0;
                for (int v : part[s]) smask |= 1u << v;
                for (size_t c = 0; c < part.size(); ++c) {
                    if (part[c].size() <= 1) continue;
                    std::map<int, std::vector<int>, std::greater<int>> groups;
                    for (int v : part[c]) groups[std::popcount(adj[v] & smask)].push_back(v);
                    if (groups.size() <= 1) continue;
                    Part np;
                    np.reserve(part.size() + groups.size());
                    for (size_t k = 0; k < part.size(); ++k) {
                        if (k == c)
                            for (auto& [cnt, vs] : groups) np.push_back(vs);
                        else
                            np.push_back(part[k]);
                    }
                    part = std::move(np);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<uint8_t> bitsPrefix(const std::vector<int>& pos2v, int k) const {
        std::vector<uint8_t> bits;
        bits.reserve(k * (k - 1) / 2);
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) bits.push_back((adj[pos2v[j]] >> pos2v[i]) & 1u);
        return bits;
    }

    static bool twin(const Canonicalizer& c, int u, int v) {
        uint32_t self = (1u << u) | (1u << v);
        return ((c.adj[u] ^ c.adj[v]) & ~self) == 0;
    }

    void search(Part part) {
        if (++nodes > 20'000'000) throw std::runtime_error("canonicalForm: search cap exceeded");
        refine(part);
        std::vector<int> prefix;
        size_t cell = 0;
        while (cell < part.size() && part[cell].size() == 1) prefix.push_back(part[cell++][0]);
        int k = static_cast<int>(prefix.size());
        if (haveBest) {
            auto partial = bitsPrefix(prefix, k);
            // bestBits prefix of the same length is fully determined
            for (size_t i = 0; i < partial.size(); ++i) {
                if (partial[i] < bestBits[i]) return;   // cannot beat best
                if (partial[i] > bestBits[i]) break;    // will replace best at a leaf
            }
        }
        if (cell == part.size()) {
            auto bits = bitsPrefix(prefix, n);
            if (!haveBest || bits > bestBits) {
                bestBits = std::move(bits);
                bestPerm = prefix;
                haveBest = true;
            }
            return;
        }
        const std::vector<int>& target = part[cell];
        std::vector<int> reps;
        for (int v : target) {
            bool dup = false;
            for (int u : reps)
                if (twin(*this, u, v)) {
                    dup = true;
                    break;
                }
            if (!dup) reps.push_back(v);
        }
        for (int v : reps) {
            Part child;
            child.reserve(part.size() + 1);
            for (size_t i = 0; i < part.size(); ++i) {
                if (i != cell) {
                    child.push_back(part[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : target)
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

}  // namespace

CanonicalKey canonicalForm(const Graph& g) {
    int n = g.order();
    if (n > 16) throw std::invalid_argument("canonicalForm: order cap is 16");
    Canonicalizer c;
    c.n = n;
    for (auto [u, v] : g.edges()) {
        c.adj[u] |= 1u << v;
        c.adj[v] |= 1u << u;
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    c.search({all});

    // bestPerm maps position -> original vertex; relabel edges accordingly
    std::vector<int> posOf(n);
    for (int i = 0; i < n; ++i) posOf[c.bestPerm[i]] = i;
    EdgeList edges;
    for (auto [u, v] : g.edges()) {
        int a = posOf[u], b = posOf[v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    CanonicalKey key;
    key.order = n;
    key.size = g.size();
    key.edges = edges;
    key.g6 = toGraph6(Graph(n, edges));
    return key;
}

}  // namespace labelkit
