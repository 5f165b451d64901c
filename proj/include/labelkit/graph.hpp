#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace labelkit {

using EdgeList = std::vector<std::pair<int, int>>;

// Finite simple undirected graph. Nodes are 0..p-1, edges normalized u < v,
// sorted, duplicate-free. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int order, EdgeList edges);  // validates; throws std::invalid_argument

    int order() const { return p_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const EdgeList& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    bool adjacent(int u, int v) const;

    // adjacency bitmask row; only valid when order() <= 64
    uint64_t neighborMask(int u) const { return bits_[u]; }

    std::vector<int> degreeSequence() const;  // descending
    bool connected() const;
    std::vector<int> componentIds() const;    // component index per node

    Graph plusEdge(int u, int v) const;
    Graph minusEdge(int u, int v) const;
    Graph plusVertex(const std::vector<int>& nbrs) const;
    // subgraph induced by keeping only the given edges (nodes touched by them)
    Graph edgeSubgraph(const std::vector<int>& edgeIdx, std::vector<int>* nodeMap = nullptr) const;

    bool operator==(const Graph& o) const { return p_ == o.p_ && edges_ == o.edges_; }

private:
    int p_ = 0;
    EdgeList edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> bits_;
};

Graph makeGraph(int order, const EdgeList& edges);

// Named families. family is one of: complete, cycle, pathEdges, star,
// completeBipartite, wheel, prism, hypercube, petersen, platonic, H, Bnn
// (plus the platonic aliases tetrahedron/cube/octahedron/dodecahedron/icosahedron).
// H(l,m,n) defaults to the join of m*K_l with an edgeless graph on n nodes;
// a fourth parameter = 1 selects the Cartesian reading instead.
Graph generate(const std::string& family, const std::vector<int>& params);

Graph disjointUnion(const Graph& a, const Graph& b);
Graph joinGraphs(const Graph& a, const Graph& b);
// identify node u of a with node v of b; a's nodes keep their indices
Graph coalesce(const Graph& a, int u, const Graph& b, int v);

struct GraphClassRecord {
    bool connected = false;
    bool tree = false;
    bool unicyclic = false;
    bool bipartite = false;
    std::vector<int> partA, partB;  // populated when bipartite
    bool eulerian = false;
    std::vector<int> degreeSequence;
    int qMod4 = 0;
    std::optional<std::vector<int>> cycleLengths;  // only when order <= 12
};

GraphClassRecord classify(const Graph& g);

struct InvariantNumbers {
    int beta0 = 0;   // independence number
    int omega = 0;   // clique number
    int minDeg = 0;
    int maxDeg = 0;
};

// exact via branch and bound; requires order <= 64
InvariantNumbers invariantNumbers(const Graph& g);

// all simple cycles as (node bitmask, length); requires order <= 12.
// Throws if the cycle count exceeds an internal safety cap.
std::vector<std::pair<uint32_t, int>> cycleInventory(const Graph& g);

}  // namespace labelkit
