#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "labelkit/graph.hpp"
#include "labelkit/io.hpp"
#include "labelkit/search.hpp"

namespace labelkit {

enum class CertVerdict { Violated, Satisfied, Inapplicable };
std::string certVerdictName(CertVerdict v);

// Violated certificates are sound refutations: rosaGolomb / binaryPartition /
// naryPartition certify non-gracefulness, joinEulerianNonSupergraceful
// certifies non-supergracefulness, the prime* rules certify non-primality.
struct Certificate {
    std::string rule;
    CertVerdict verdict = CertVerdict::Inapplicable;
    nlohmann::json witness;
};

// rule in {rosaGolomb, binaryPartition, naryPartition,
//          joinEulerianNonSupergraceful, primeIndependence, primeClique,
//          primeEdgeCount, primeMinDegree, allCyclesMod4Zero};
// naryPartition takes the modulus as param ("n", 2..5)
Certificate certify(const Graph& g, const std::string& rule, const nlohmann::json& params = {});

// verify-given-labeling direction of the n-ary partition condition: residues
// of phi mod n must satisfy the pooled residue-class bounds (they hold with
// equality for every graceful labeling)
struct NaryVerify {
    bool ok = true;
    std::vector<int> classEdges;   // edges per pooled class 0..n/2
    std::vector<int> classBounds;  // pooled label counts
};
NaryVerify naryPartitionVerify(const Graph& g, const Labeling& phi, int n);

struct PatternHit {
    int pattern;                 // 1, 2 or 3 per the forbidden-subgraph list
    std::vector<int> lengths;    // cycle lengths involved
    std::vector<uint32_t> masks; // node masks of the cycles involved
};
std::vector<PatternHit> forbiddenPatternScan(const Graph& g);

// shared path P_l has l nodes, l-1 edges
int thirdCycleMod4(int m, int n, int l);

struct Table1Row {
    int mRes, nRes, lRes;
    bool degenerate;       // l = 1: single shared node, no third cycle through the path
    int tableEntry;        // as printed
    int nodeReading;       // m + n - 2(l-1) mod 4
    int edgeReading;       // m + n - 2l mod 4
    bool nodeMatches, edgeMatches;
};
std::vector<Table1Row> table1Audit();

struct SubgraphAudit {
    bool verdict = false;
    std::optional<Graph> failingSubgraph;
    size_t subgraphClasses = 0;
};

// every connected subgraph graceful; caps order <= 8, size <= 12
SubgraphAudit highlyGracefulAudit(const Graph& g, const SearchBudget& budget = {});
// non-graceful with every proper connected subgraph graceful
SubgraphAudit criticalAudit(const Graph& g, const SearchBudget& budget = {});

}  // namespace labelkit
