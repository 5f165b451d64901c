#pragma once

#include <vector>

#include "labelkit/graph.hpp"

namespace labelkit {

enum class GraphKind { AllGraphs, ConnectedGraphs, Trees, Unicyclic, EulerianFiltered };

struct EnumOptions {
    int maxEdges = -1;  // -1 = unbounded (required >= 0 for order 8 general graphs)
};

// Exactly one representative per isomorphism class, sorted by canonical key.
// Caps: AllGraphs/ConnectedGraphs/EulerianFiltered order <= 7 (<= 8 with an
// edge bound), Trees <= 15, Unicyclic <= 9.
std::vector<Graph> enumerateGraphs(GraphKind kind, int order, EnumOptions opts = {});

}  // namespace labelkit
