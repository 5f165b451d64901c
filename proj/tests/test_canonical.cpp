#include "doctest.h"

#include <stdexcept>

#include <random>

#include "labelkit/canonical.hpp"
#include "labelkit/graph.hpp"

using namespace labelkit;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    EdgeList e;
    for (auto [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
    return Graph(g.order(), std::move(e));
}

}  // namespace

TEST_CASE("canonical key invariant under 100 random permutations") {
    std::mt19937 rng(20240811);
    std::vector<Graph> graphs = {
        generate("cycle", {4}),
        generate("cycle", {7}),
        generate("complete", {6}),
        generate("star", {5}),
        generate("pathEdges", {6}),
        generate("petersen", {}),
        generate("wheel", {5}),
        generate("Bnn", {4}),
        generate("H", {2, 2, 2}),
        generate("hypercube", {4}),
        coalesce(generate("complete", {3}), 0, generate("complete", {3}), 0),
        disjointUnion(generate("cycle", {3}), generate("pathEdges", {3})),
    };
    for (auto& g : graphs) {
        auto key = canonicalForm(g);
        std::vector<int> perm(g.order());
        for (int i = 0; i < g.order(); ++i) perm[i] = i;
        for (int t = 0; t < 100; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonicalForm(permuted(g, perm)) == key);
        }
    }
}

TEST_CASE("non-isomorphic graphs get distinct keys") {
    // P3 path vs K_{1,3}: both order 4, size 3
    Graph path = generate("pathEdges", {3});
    Graph star = generate("star", {3});
    CHECK_FALSE(canonicalForm(path) == canonicalForm(star));

    // C6 vs 2C3
    CHECK_FALSE(canonicalForm(generate("cycle", {6})) ==
                canonicalForm(disjointUnion(generate("cycle", {3}), generate("cycle", {3}))));
}

TEST_CASE("canonical key stable across runs and under node reordering") {
    Graph k4 = generate("complete", {4});
    auto a = canonicalForm(k4);
    auto b = canonicalForm(k4);
    CHECK(a == b);
    CHECK(a.g6 == "C~");  // complete graph: all bits set

    Graph c4a = makeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph c4b = makeGraph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonicalForm(c4a) == canonicalForm(c4b));
}

TEST_CASE("canonicalForm order cap") {
    CHECK_THROWS_AS(canonicalForm(generate("complete", {17})), std::invalid_argument);
    CHECK_NOTHROW(canonicalForm(generate("complete", {16})));
}
