#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/search.hpp"

namespace labelkit {

// tree on label universe {0..p-1}; each node IS its label; edges normalized
using LabeledTree = EdgeList;

// one pair (low[d], low[d]+d) per difference d = 1..p-1; low[p-1] is forced 0
struct Selection {
    std::vector<int> low;  // index 1..p-1 used
    EdgeList edges(int p) const;
};

struct SelectionRecord {
    Selection selection;
    bool isTree = false;
};

// all (p-1)! selections in lexicographic order of (low[1],...,low[p-1]);
// every tree-classified selection is a gracefully labeled tree
std::vector<SelectionRecord> diffRepEnumerate(int p);

// modified Mayeda-Seshu exchange closure from the star centered at 0;
// every member is a gracefully labeled tree (edge swaps preserve differences)
std::set<LabeledTree> msGenerate(int p);

struct Prop63Audit {
    long selections = 0;
    long treeSelections = 0;
    bool agree = false;  // false for p >= 4: triangle-bearing selections exist
};
Prop63Audit prop63Audit(int p);

struct TreeCensus {
    size_t coveredClasses = 0;
    size_t totalClasses = 0;
    std::set<std::string> covered;  // canonical keys reached by some selection
};
TreeCensus gracefulTreeCensus(int p);

struct CoverageAudit {
    bool msEqualsDiffRepTrees = false;   // labeling-level completeness of the MS process
    bool msCoversAllTreeClasses = false;
    std::vector<LabeledTree> missingLabelings;  // diffRep trees the MS closure missed
};
CoverageAudit coverageAudit(int p);

struct TreeAttractRow {
    Graph tree;
    std::string key;
    std::vector<bool> zeroAttractive;  // per node
    bool hasZeroRepellingNode = false;
    bool hasZeroAttractiveEndnode = false;
};
struct TreeAttractSurveyResult {
    int order = 0;
    std::vector<TreeAttractRow> rows;
    bool anyZeroRepelling = false;
    bool everyTreeHasZeroAttractiveEndnode = true;
};
TreeAttractSurveyResult treeAttractSurvey(int order, const SearchBudget& budget = {});

// sweeps orders 2..maxOrder; empty when no 0-repelling node exists in range
std::optional<int> minimalZeroRepellingOrder(int maxOrder, const SearchBudget& budget = {});

}  // namespace labelkit
