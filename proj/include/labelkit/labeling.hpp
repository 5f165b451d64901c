#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/io.hpp"

namespace labelkit {

struct LabelProfile {
    int q0 = 0;                          // max node label
    std::vector<int> nodeLabels;         // N, sorted ascending
    std::vector<int> edgeLabels;         // E with multiplicity, sorted
    bool edgeLabelRepeats = false;
    std::vector<int> missingNodeLabels;  // {0..q0} - N
    std::vector<int> missingEdgeLabels;  // {1..q0} - E
    std::map<int, EdgeList> rSets;       // e in missingEdgeLabels -> non-edges with |diff| = e
};

LabelProfile profile(const Graph& g, const Labeling& phi);

struct LabelingKind {
    enum Kind { Graceful, Total, Semitotal, Prime, Alpha, EdgeDistinct } kind = Graceful;
    int slack = 0;  // Semitotal only

    static LabelingKind graceful() { return {Graceful, 0}; }
    static LabelingKind total() { return {Total, 0}; }
    static LabelingKind semitotal(int s) { return {Semitotal, s}; }
    static LabelingKind prime() { return {Prime, 0}; }
    static LabelingKind alpha() { return {Alpha, 0}; }
    static LabelingKind edgeDistinct() { return {EdgeDistinct, 0}; }
    std::string name() const;
};

struct CheckResult {
    bool ok = false;
    std::vector<std::string> violations;
};

CheckResult checkLabeling(const Graph& g, const Labeling& phi, LabelingKind kind);

// base - phi(u) per node; requires base >= max node label
Labeling complementaryLabeling(const Labeling& phi, int base);

// phi(x) + c on the given nodes, unchanged elsewhere; c >= 0
Labeling shiftSubset(const Labeling& phi, const std::vector<int>& nodes, int c);

}  // namespace labelkit
