#pragma once

#include <compare>
#include <string>

#include "labelkit/graph.hpp"

namespace labelkit {

// Permutation-invariant key: equal keys iff isomorphic inputs.
// g6 is the graph6 string of the canonical representative and doubles
// as the comparison/serialization key.
struct CanonicalKey {
    int order = 0;
    int size = 0;
    EdgeList edges;   // canonical representative, sorted
    std::string g6;

    bool operator==(const CanonicalKey& o) const { return g6 == o.g6; }
    std::strong_ordering operator<=>(const CanonicalKey& o) const { return g6 <=> o.g6; }
};

// iterated refinement with backtracking over remaining cells; order cap 16
CanonicalKey canonicalForm(const Graph& g);

}  // namespace labelkit
