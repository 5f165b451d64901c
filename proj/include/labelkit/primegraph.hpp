#pragma once

#include <optional>
#include <string>
#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/search.hpp"

namespace labelkit {

// SP_n: nodes {1..n}, u ~ v iff gcd(u,v) = 1. Node i of the Graph carries
// label i+1.
struct SPRecord {
    int n = 0;
    Graph graph;
    long edgeCountFormula = 0;       // sum of Euler totients phi(2)..phi(n)
    int omega = 0, beta0 = 0, minDegree = 0, maxDegree = 0;
    std::vector<int> fullDegreeLabels;  // labels of degree n-1
    int distinctDegreeCount = 0;
};
SPRecord buildSP(int n);  // exact invariants for n <= 40

struct SpClaim {
    std::string claim;
    std::string computed;
    std::string paper;
    bool match = false;
};
std::vector<SpClaim> spAudit(int n);

// paper's Table 2 row versus the computed edge counts, n = 1..maxN (<= 20)
struct Table2Row {
    int n;
    long computed;
    long paper;
    bool match;
};
std::vector<Table2Row> table2Compare(int maxN = 20);

struct TreeCompleteResult {
    bool verdict = true;
    std::optional<Graph> failingTree;
    size_t treesChecked = 0;
    size_t budgetExceeded = 0;
};
// every tree of order n admits a prime labeling (spans SP_n)
TreeCompleteResult treeCompleteCheck(int n, const SearchBudget& budget = {});

struct InferenceStep {
    int order;
    std::string via;
};
// propagation: n verified & n+1 prime => n+1, n+2; twin primes n+1, n+3 => n+1..n+5
std::vector<InferenceStep> inferenceChain(const std::vector<int>& base, int maxN);

struct MuResult {
    int n = 0;
    bool connectedOnly = false;
    bool defined = false;
    int value = 0;
    std::vector<std::string> witnesses;  // canonical keys of all minimal non-prime graphs
};
MuResult muCompute(int n, bool connectedOnly, const SearchBudget& budget = {});

// non-prime graphs of order n whose every single-edge deletion is prime
std::vector<Graph> eMinimalNonPrime(int n, const SearchBudget& budget = {});

struct KrsAuditResult {
    bool primeVerdict = false;
    bool paperFormulaVerdict = false;
    bool agree = false;
};
KrsAuditResult krsAudit(int r, int s, const SearchBudget& budget = {});

}  // namespace labelkit
