#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "labelkit/enumerate.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/search.hpp"

using namespace labelkit;

namespace {

// naive oracle: try every injective labeling into {0..q}
bool bruteGraceful(const Graph& g) {
    int p = g.order(), q = g.size();
    if (p > q + 1) return false;
    std::vector<int> labels(q + 1);
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int v, uint32_t usedMask) -> bool {
        if (v == p) {
            Labeling phi(p);
            for (int i = 0; i < p; ++i) phi[i] = pick[i];
            return checkLabeling(g, phi, LabelingKind::graceful()).ok;
        }
        for (int x = 0; x <= q; ++x) {
            if (usedMask & (1u << x)) continue;
            pick.push_back(x);
            if (self(self, v + 1, usedMask | (1u << x))) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

TEST_CASE("findGraceful basic verdicts") {
    CHECK(findGraceful(generate("complete", {2})).found());
    CHECK(findGraceful(generate("complete", {2})).witness == Labeling{0, 1});
    CHECK(findGraceful(generate("cycle", {4})).found());
    CHECK(findGraceful(generate("complete", {5})).exhausted());
    CHECK(findGraceful(generate("cycle", {5})).exhausted());
    CHECK(findGraceful(generate("cycle", {6})).exhausted());
    CHECK(findGraceful(generate("complete", {6})).exhausted());
    // p > q+1: immediate exhausted
    Graph twoK2 = disjointUnion(generate("complete", {2}), generate("complete", {2}));
    auto oc = findGraceful(twoK2);
    CHECK(oc.exhausted());
    CHECK(oc.stats.nodes == 0);
}

TEST_CASE("findGraceful equals brute force for all graphs with q <= 8") {
    for (int n = 2; n <= 5; ++n)
        for (auto& g : enumerateGraphs(GraphKind::AllGraphs, n)) {
            if (g.size() > 8) continue;
            CAPTURE(n);
            CHECK(findGraceful(g).found() == bruteGraceful(g));
        }
    for (auto& g : enumerateGraphs(GraphKind::ConnectedGraphs, 6)) {
        if (g.size() > 8) continue;
        CHECK(findGraceful(g).found() == bruteGraceful(g));
    }
}

TEST_CASE("findGraceful determinism and complement closure") {
    for (auto& g : {generate("cycle", {7}), generate("wheel", {4}), generate("pathEdges", {6}),
                    generate("star", {5}), generate("completeBipartite", {2, 3})}) {
        auto a = findGraceful(g);
        auto b = findGraceful(g);
        REQUIRE(a.found());
        CHECK(a.witness == b.witness);
        CHECK(a.stats.nodes == b.stats.nodes);
        Labeling refl = complementaryLabeling(*a.witness, g.size());
        CHECK(checkLabeling(g, refl, LabelingKind::graceful()).ok);
    }
}

TEST_CASE("findGraceful with fixed node labels") {
    Graph p8 = generate("pathEdges", {8});
    auto forced = findGraceful(p8, {}, {{{0, 5}}, {}});
    REQUIRE(forced.found());
    CHECK((*forced.witness)[0] == 5);
    // infeasible fixed pair
    Graph k2 = generate("complete", {2});
    CHECK(findGraceful(k2, {}, {{{0, 0}, {1, 0}}, {}}).exhausted());
}

TEST_CASE("findOptimal") {
    auto c4 = findOptimal(generate("cycle", {4}));
    CHECK(c4.opt == 4);  // graceful, so opt = q
    auto c5 = findOptimal(generate("cycle", {5}));
    CHECK(c5.opt == 6);
    auto k5 = findOptimal(generate("complete", {5}));
    CHECK(k5.opt == 11);  // shortest 5-mark perfect difference ruler
    // witness contract: edge-distinct, 0 present, max <= opt
    for (auto& r : {c4, c5, k5}) {
        CHECK(*std::min_element(r.witness.begin(), r.witness.end()) == 0);
        CHECK(*std::max_element(r.witness.begin(), r.witness.end()) <= r.opt);
    }
    CHECK_THROWS_AS(findOptimal(generate("complete", {7})), std::invalid_argument);
}

TEST_CASE("findTotal") {
    auto k3 = findTotal(generate("complete", {3}));
    REQUIRE(k3.found());
    CHECK(checkLabeling(generate("complete", {3}), {1, 4, 6}, LabelingKind::total()).ok);
    CHECK(findTotal(generate("complete", {4})).exhausted());
    CHECK(findTotal(generate("complete", {5})).exhausted());
    CHECK(findTotal(generate("complete", {5}).minusEdge(0, 1)).exhausted());  // K5 - e
    CHECK(findTotal(generate("hypercube", {3})).found());
    // 2K2 is non-supergraceful even though all its components are
    Graph twoK2 = disjointUnion(generate("complete", {2}), generate("complete", {2}));
    CHECK(findTotal(twoK2).exhausted());
}

TEST_CASE("findSemitotal slack and monotone relation to findTotal") {
    auto k3 = findSemitotal(generate("complete", {3}));
    CHECK(k3.slack == 0);
    auto k4 = findSemitotal(generate("complete", {4}));
    CHECK(k4.slack >= 1);
    CHECK(checkLabeling(generate("complete", {4}), k4.witness, LabelingKind::semitotal(k4.slack)).ok);
    for (auto& g : {generate("cycle", {4}), generate("complete", {4}), generate("star", {3}),
                    disjointUnion(generate("complete", {2}), generate("complete", {2}))}) {
        auto st = findSemitotal(g);
        CHECK((st.slack == 0) == findTotal(g).found());
    }
}

TEST_CASE("findPrime") {
    CHECK(findPrime(generate("pathEdges", {3})).found());
    CHECK(findPrime(generate("complete", {4})).exhausted());
    CHECK(findPrime(generate("completeBipartite", {3, 3})).exhausted());
    // Petersen has independence number 4 < 5, so it cannot be prime
    CHECK(findPrime(generate("petersen", {})).exhausted());
    CHECK(findPrime(generate("hypercube", {3})).found());  // Q3, the one prime platonic solid
    // hereditary: a prime witness restricted to a spanning subgraph stays prime
    Graph c6 = generate("cycle", {6});
    auto oc = findPrime(c6);
    REQUIRE(oc.found());
    for (auto [u, v] : c6.edges()) {
        Graph sub = c6.minusEdge(u, v);
        CHECK(checkLabeling(sub, *oc.witness, LabelingKind::prime()).ok);
    }
    // constraint: n on a pendant node
    Graph star = generate("star", {4});
    auto constrained = findPrime(star, {}, true);
    REQUIRE(constrained.found());
    int n = star.order();
    for (int v = 0; v < n; ++v)
        if ((*constrained.witness)[v] == n) CHECK(star.degree(v) == 1);
    CHECK_THROWS_AS(findPrime(generate("cycle", {4}), {}, true), std::invalid_argument);
}

TEST_CASE("attract") {
    // every node of the path with 8 edges is i-attractive for i = 1..8
    Graph p8 = generate("pathEdges", {8});
    for (int v = 0; v < p8.order(); ++v)
        for (int i = 1; i <= 8; ++i) {
            auto r = attractNode(p8, v, i);
            CHECK(r.attractive);
        }
    // reflection symmetry attract(u,i) == attract(u,q-i)
    Graph spider = makeGraph(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
    int q = spider.size();
    for (int v = 0; v < spider.order(); ++v)
        for (int i = 0; i <= q; ++i)
            CHECK(attractNode(spider, v, i).attractive == attractNode(spider, v, q - i).attractive);
    // the middle edge of the 3-edge path never gets label 3
    Graph p3 = generate("pathEdges", {3});
    CHECK_FALSE(attractEdge(p3, {1, 2}, 3).attractive);
    CHECK(attractEdge(p3, {1, 2}, 2).attractive);
    // non-graceful input reports all-repelling with the distinguishing flag
    auto rep = attractNode(generate("cycle", {5}), 0, 0);
    CHECK_FALSE(rep.attractive);
    CHECK_FALSE(rep.graphGraceful);
}

TEST_CASE("censusRun") {
    auto trees9 = enumerateGraphs(GraphKind::Trees, 9);
    auto report = censusRun(trees9, "trees:9", Property::Graceful);
    CHECK(report.entries.size() == 47);
    CHECK(report.found == 47);
    CHECK(report.exhausted == 0);
    // entries ordered by key, witnesses re-validate on the canonical representative
    for (size_t i = 1; i < report.entries.size(); ++i)
        CHECK(report.entries[i - 1].key < report.entries[i].key);
    // parallel run merges to the identical report
    auto par = censusRun(trees9, "trees:9", Property::Graceful, {}, 4);
    REQUIRE(par.entries.size() == report.entries.size());
    for (size_t i = 0; i < par.entries.size(); ++i) {
        CHECK(par.entries[i].key == report.entries[i].key);
        CHECK(par.entries[i].witness == report.entries[i].witness);
    }
}
