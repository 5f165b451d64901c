#pragma once

#include <optional>
#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/search.hpp"

namespace labelkit {

// Every construction re-checks its output against the declared predicate
// before returning; a failed self-check throws std::logic_error.

struct LabeledGraph {
    Graph graph;
    Labeling labeling;
};

struct EmbeddingResult {
    Graph host;
    Labeling hostLabeling;
    std::vector<int> injection;  // guest node -> host node, edge-preserving
    bool induced = false;        // non-edges of the guest preserved too
};

struct AttachmentComponent {
    Graph graph;
    Labeling labels;  // absolute labels in the host label space
};

struct AttachmentSpec {
    std::vector<std::pair<int, int>> increments;              // (node, c_i), c_i > 0
    std::vector<AttachmentComponent> components;              // coalesced at their one shared label
    std::vector<std::pair<int, std::pair<int, int>>> type1;   // missing label -> non-adjacent pair
};

// apply a manual extension spec: bump labels, close every missing edge label
// exactly once by a listed non-edge insertion or an attached component
LabeledGraph generalExtend(const Graph& g, const Labeling& graceful, const AttachmentSpec& spec);

struct ExtendSearchBounds {
    int maxIncrement = 2;
    size_t maxOutputs = 64;
};
// bounded automatic search over single-node increments; gaps close by
// non-edge insertions, with single-pendant attachments as the fallback
std::vector<LabeledGraph> generalExtendSearch(const Graph& g, const Labeling& graceful,
                                              const ExtendSearchBounds& bounds = {});

enum class AlphaExtendVariant { CloseWithApexEdges, CoalesceTree };
// shift the upper side of an alpha labeling by c, then close the vacated
// labels 1..c with edges at the 0-node or by coalescing a shifted graceful tree
LabeledGraph shiftedAlphaExtend(const Graph& g, const Labeling& alpha, int c,
                                AlphaExtendVariant variant,
                                const std::optional<LabeledGraph>& tree = std::nullopt);

// raise the (p-1)-labeled node of a gracefully labeled tree by c <= p-2 and
// complete every vacated edge label from its non-edge realizer set;
// one output per combination of realizer choices
std::vector<LabeledGraph> bumpTopAndComplete(const Graph& tree, const Labeling& graceful, int c,
                                             size_t maxOutputs = 1024);

// the c = 1 case: one output per realizer pair, all unicyclic of order p
std::vector<LabeledGraph> unicyclicFromTree(const Graph& tree, const Labeling& graceful);

enum class AlphaUnicyclicVariant {
    ShiftAllB,        // vacates edge label 1; closes with a consecutive-label pair
    ShiftBExceptMin,  // holds the smallest upper-side label fixed; vacates one label
};
struct AlphaUnicyclicResult {
    Graph graph;
    Labeling labeling;
    int cycleLength = 0;
};
AlphaUnicyclicResult alphaUnicyclic(const Graph& tree, const Labeling& alpha,
                                    AlphaUnicyclicVariant variant);

// union of T with n extra copies of its upper side, every <A u B_i> a copy of
// T; bipartite, all cycles are 4-cycles, gracefully labeled by block shifts
LabeledGraph replicatePartition(const Graph& tree, const Labeling& alpha, int copies);

// identify the lower sides of two alpha labelings of G by equal labels and
// raise the second upper side by q; output is alpha-labeled of size 2q
LabeledGraph glueAlpha(const Graph& g, const Labeling& alpha, const Labeling& alpha2);

enum class EmbedStrategy {
    FreeLabeling,  // edge-distinct labeling, then close every gap at the 0-node
    CompleteHost,  // optimally labeled K_p plus one pendant per missing label
    InducedHost,   // pendant construction that keeps the guest induced
};
// initialLabeling (FreeLabeling only) overrides the solver-chosen
// edge-distinct start; it must be injective with a 0-labeled node
EmbeddingResult embedGraceful(const Graph& g, EmbedStrategy strategy,
                              const SearchBudget& budget = {},
                              const std::optional<Labeling>& initialLabeling = std::nullopt);

struct OptimalEmbedding {
    int hostOrder = 0;                         // minimal host order found (0: none exists)
    std::vector<EmbeddingResult> minimalHosts; // all minimal hosts up to isomorphism
    bool allConnected = false;
    bool guestGraceful = false;                // guest needed no extension
    bool searchedAllOrders = false;            // emptiness is definitive, not a budget artifact
};
// minimal-order graceful host realizing every missing edge label exactly
// once with the guest induced; keeps all minimal hosts for the connectivity
// audit. The host family of a single labeling can be legitimately empty
// (every realizer of some missing label joins two guest nodes).
OptimalEmbedding embedGracefulOptimal(const Graph& g, const Labeling& optimal, int orderBudget = 8);

struct OptimalEmbeddingAudit {
    int optOrder = 0;  // min host order over every optimal labeling (0: none found)
    size_t labelingsTried = 0;
    size_t labelingsWithHosts = 0;
    std::vector<EmbeddingResult> minimalHosts;  // all order-optOrder hosts up to isomorphism
    bool allConnected = false;
};
// sweep every optimal labeling of a non-graceful guest and aggregate the
// minimal-order hosts; this is the connectivity audit's exhaustive form
OptimalEmbeddingAudit optimalEmbeddingAudit(const Graph& g, const SearchBudget& budget = {});

// merge the components of a disconnected host at equal node labels
EmbeddingResult mergeComponents(const EmbeddingResult& emb);

// apex labeled 0 over a totally labeled graph: K1+G is graceful
LabeledGraph apexGraceful(const Graph& g, const Labeling& total);

// mu = phi + p turns a graceful tree labeling into a total labeling
Labeling treeTotalFromGraceful(const Graph& tree, const Labeling& graceful);

// reflect a semitotal labeling around a full-degree node carrying the top
// label so that 1 becomes a node label
Labeling semitotalNormalize(const Graph& g, const Labeling& semitotal, int fullDegreeNode);

enum class PendantMode {
    GracefulAtZero,  // pendants q+1..q+t at the 0-node of a graceful labeling
    TotalAtOne,      // pendants p+q+2, p+q+4, ... at the 1-node of a total labeling
    TotalStepAlpha,  // t rounds of alpha pendants at the minimum-label node
};
LabeledGraph growPendants(const Graph& g, const Labeling& phi, PendantMode mode, int t);

enum class SupergracefulEmbedMode {
    IsolatedCover,      // isolated nodes absorb every missing label
    ConnectedPendants,  // parity construction: pendants at the 1-node plus anchor edges
};
EmbeddingResult embedSupergraceful(const Graph& g, const Labeling& semitotal,
                                   SupergracefulEmbedMode mode);

enum class NonPrimeFamily { ConnectedEven, ConnectedOdd1, ConnectedOdd3, Disconnected };
// extremal non-prime families; the independence number is computed exactly
// at construction and asserted below floor(n/2)
Graph nonPrimeExtremal(int n, NonPrimeFamily family);

}  // namespace labelkit
