#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/io.hpp"

namespace labelkit {

struct SearchBudget {
    uint64_t maxNodes = 10'000'000;
    uint64_t maxWallMs = 60'000;
};

struct SearchStats {
    uint64_t nodes = 0;
    int maxDepth = 0;
    double wallMs = 0;  // informational; excluded from stable reports
};

struct SearchOutcome {
    enum class Status { Found, Exhausted, BudgetExceeded };
    Status status = Status::Exhausted;
    std::optional<Labeling> witness;
    SearchStats stats;

    bool found() const { return status == Status::Found; }
    bool exhausted() const { return status == Status::Exhausted; }
};

std::string statusName(SearchOutcome::Status s);

struct GracefulConstraints {
    std::vector<std::pair<int, int>> fixedNodeLabels;            // (node, label)
    std::optional<std::pair<std::pair<int, int>, int>> forcedEdgeLabel;  // edge, induced label
};

// Exhaustive deterministic solvers. Found witnesses always re-validate
// against checkLabeling; Exhausted means the whole space was covered.
SearchOutcome findGraceful(const Graph& g, const SearchBudget& budget = {},
                           const GracefulConstraints& cons = {});

struct OptimalResult {
    int opt = 0;
    Labeling witness;
    SearchStats stats;
    bool budgetExceeded = false;
};
OptimalResult findOptimal(const Graph& g, const SearchBudget& budget = {});

SearchOutcome findTotal(const Graph& g, const SearchBudget& budget = {},
                        bool requireNodeLabelOne = false);

struct SemitotalResult {
    int slack = 0;
    Labeling witness;
    SearchStats stats;
    bool budgetExceeded = false;
};
SemitotalResult findSemitotal(const Graph& g, const SearchBudget& budget = {},
                              bool requireNodeLabelOne = false);

// enumerate total-style labelings at a fixed slack; callback returns false to stop
void forEachSemitotalWitness(const Graph& g, int slack, bool requireNodeLabelOne,
                             const SearchBudget& budget,
                             const std::function<bool(const Labeling&)>& cb);

// enumerate injective labelings into {0..maxLabel} with pairwise-distinct
// edge differences; callback returns false to stop
void forEachEdgeDistinctLabeling(const Graph& g, int maxLabel, const SearchBudget& budget,
                                 const std::function<bool(const Labeling&)>& cb);

SearchOutcome findPrime(const Graph& g, const SearchBudget& budget = {},
                        bool labelNOnPendant = false);

struct AttractResult {
    bool attractive = false;
    bool graphGraceful = false;  // distinguishes repelling from globally non-graceful
    SearchOutcome::Status status = SearchOutcome::Status::Exhausted;
};
AttractResult attractNode(const Graph& g, int node, int label, const SearchBudget& budget = {});
AttractResult attractEdge(const Graph& g, std::pair<int, int> edge, int label,
                          const SearchBudget& budget = {});

enum class Property { Graceful, Total, Prime };
std::string propertyName(Property p);

struct CensusEntry {
    std::string key;  // canonical graph6
    SearchOutcome::Status status;
    std::optional<Labeling> witness;  // on the canonical representative's node order
    uint64_t nodes = 0;
};

struct CensusReport {
    std::string universe;
    std::string property;
    std::vector<CensusEntry> entries;  // ordered by key
    size_t found = 0, exhausted = 0, budgetExceeded = 0;
};

CensusReport censusRun(const std::vector<Graph>& universe, const std::string& universeName,
                       Property property, const SearchBudget& perGraph = {}, int jobs = 1);

}  // namespace labelkit
