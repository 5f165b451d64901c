#include "doctest.h"

#include <stdexcept>

#include <bit>
#include <set>

#include "labelkit/graph.hpp"

using namespace labelkit;

TEST_CASE("makeGraph validates input") {
    Graph k3 = makeGraph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK_THROWS_AS(makeGraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(makeGraph(4, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(makeGraph(4, {{1, 0}, {0, 1}}), std::invalid_argument);  // same edge, swapped
    CHECK_THROWS_AS(makeGraph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("generator closed forms for p and q") {
    struct Row {
        const char* family;
        std::vector<int> params;
        int p, q;
    };
    std::vector<Row> rows = {
        {"complete", {5}, 5, 10},
        {"cycle", {5}, 5, 5},
        {"pathEdges", {4}, 5, 4},
        {"star", {3}, 4, 3},
        {"completeBipartite", {3, 3}, 6, 9},
        {"wheel", {5}, 6, 10},
        {"prism", {4}, 8, 12},
        {"hypercube", {3}, 8, 12},
        {"petersen", {}, 10, 15},
        {"platonic", {4}, 20, 30},
        {"platonic", {5}, 12, 30},
        {"platonic", {3}, 6, 12},
        {"Bnn", {7}, 14, 42},
        {"H", {2, 2, 2}, 6, 10},
    };
    for (auto& r : rows) {
        Graph g = generate(r.family, r.params);
        CAPTURE(r.family);
        CHECK(g.order() == r.p);
        CHECK(g.size() == r.q);
    }
    // Bnn(n) is (n-1)-regular on 2n nodes
    Graph b7 = generate("Bnn", {7});
    for (int v = 0; v < b7.order(); ++v) CHECK(b7.degree(v) == 6);
    // H(2,2,2) join reading: degree multiset {4,4,3,3,3,3}
    Graph h = generate("H", {2, 2, 2});
    CHECK(h.degreeSequence() == std::vector<int>{4, 4, 3, 3, 3, 3});
    // Cartesian reading: n disjoint copies of mK_l
    Graph hc = generate("H", {2, 2, 2, 1});
    CHECK(hc.order() == 8);
    CHECK(hc.size() == 4);
    CHECK_FALSE(hc.connected());
    CHECK_THROWS_AS(generate("cycle", {2}), std::invalid_argument);
    CHECK_THROWS_AS(generate("nosuch", {1}), std::invalid_argument);
}

TEST_CASE("combinators") {
    Graph k1(1, {});
    Graph c5 = generate("cycle", {5});
    Graph w5 = joinGraphs(k1, c5);
    CHECK(w5.order() == 6);
    CHECK(w5.size() == 10);
    CHECK(w5.degreeSequence() == generate("wheel", {5}).degreeSequence());

    Graph k3 = generate("complete", {3});
    Graph two = disjointUnion(k3, k3);
    CHECK(two.order() == 6);
    CHECK(two.size() == 6);
    CHECK_FALSE(two.connected());

    Graph bowtie = coalesce(k3, 0, k3, 0);
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.size() == 6);
    CHECK(bowtie.degree(0) == 4);
    CHECK_THROWS_AS(coalesce(k3, 7, k3, 0), std::invalid_argument);
}

TEST_CASE("classify") {
    auto c6 = classify(generate("cycle", {6}));
    CHECK(c6.eulerian);
    CHECK(c6.qMod4 == 2);
    CHECK(c6.bipartite);
    CHECK(c6.unicyclic);
    CHECK(c6.cycleLengths.has_value());
    CHECK(*c6.cycleLengths == std::vector<int>{6});

    auto k5 = classify(generate("complete", {5}));
    CHECK(k5.eulerian);
    CHECK(k5.qMod4 == 2);
    CHECK_FALSE(k5.bipartite);

    auto pet = classify(generate("petersen", {}));
    CHECK_FALSE(pet.eulerian);
    CHECK(pet.degreeSequence == std::vector<int>(10, 3));

    auto tr = classify(generate("pathEdges", {3}));
    CHECK(tr.tree);
    CHECK(tr.connected);

    // eulerian <=> connected and all degrees even, checked by direct scan
    for (auto& g : {generate("cycle", {5}), generate("star", {4}), disjointUnion(generate("cycle", {3}), generate("cycle", {3})),
                    generate("complete", {5}), generate("wheel", {4})}) {
        bool allEven = true;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) % 2) allEven = false;
        CHECK(classify(g).eulerian == (g.connected() && allEven));
    }
}

namespace {

// brute-force oracle over all subsets, p <= 20ish
labelkit::InvariantNumbers bruteInvariants(const Graph& g) {
    int p = g.order();
    InvariantNumbers r;
    r.minDeg = g.degree(0);
    for (int v = 0; v < p; ++v) {
        r.minDeg = std::min(r.minDeg, g.degree(v));
        r.maxDeg = std::max(r.maxDeg, g.degree(v));
    }
    for (uint32_t S = 0; S < (1u << p); ++S) {
        bool clique = true, indep = true;
        for (int u = 0; u < p && (clique || indep); ++u) {
            if (!(S & (1u << u))) continue;
            for (int v = u + 1; v < p; ++v) {
                if (!(S & (1u << v))) continue;
                if (g.adjacent(u, v)) indep = false;
                else clique = false;
            }
        }
        int c = std::popcount(S);
        if (clique) r.omega = std::max(r.omega, c);
        if (indep) r.beta0 = std::max(r.beta0, c);
    }
    return r;
}

}  // namespace

TEST_CASE("invariantNumbers exact values and brute-force agreement") {
    auto k5 = invariantNumbers(generate("complete", {5}));
    CHECK(k5.omega == 5);
    CHECK(k5.beta0 == 1);
    auto two = invariantNumbers(disjointUnion(generate("complete", {3}), generate("complete", {3})));
    CHECK(two.beta0 == 2);
    auto pet = invariantNumbers(generate("petersen", {}));
    CHECK(pet.beta0 == 4);
    CHECK(pet.omega == 2);

    for (auto& g : {generate("cycle", {7}), generate("wheel", {6}), generate("Bnn", {4}),
                    generate("hypercube", {3}), generate("H", {2, 2, 2}),
                    coalesce(generate("complete", {3}), 0, generate("complete", {3}), 0)}) {
        auto a = invariantNumbers(g);
        auto b = bruteInvariants(g);
        CHECK(a.beta0 == b.beta0);
        CHECK(a.omega == b.omega);
        CHECK(a.minDeg == b.minDeg);
        CHECK(a.maxDeg == b.maxDeg);
    }
}

TEST_CASE("cycleInventory") {
    auto inv = cycleInventory(generate("cycle", {8}));
    REQUIRE(inv.size() == 1);
    CHECK(inv[0].second == 8);

    Graph bowtie = coalesce(generate("complete", {3}), 0, generate("complete", {3}), 0);
    auto binv = cycleInventory(bowtie);
    CHECK(binv.size() == 2);

    auto k4 = cycleInventory(generate("complete", {4}));
    CHECK(k4.size() == 7);  // 4 triangles + 3 four-cycles
}
