#include "doctest.h"

#include <stdexcept>

#include "labelkit/labeling.hpp"

using namespace labelkit;

TEST_CASE("profile computes all six components") {
    // C3 labeled (0,1,3)
    Graph c3 = generate("cycle", {3});
    auto p = profile(c3, {0, 1, 3});
    CHECK(p.q0 == 3);
    CHECK(p.nodeLabels == std::vector<int>{0, 1, 3});
    CHECK(p.edgeLabels == std::vector<int>{1, 2, 3});
    CHECK(p.missingNodeLabels == std::vector<int>{2});
    CHECK(p.missingEdgeLabels.empty());
    CHECK_FALSE(p.edgeLabelRepeats);

    // path a-b-c labeled (0,3,1)
    Graph path = makeGraph(3, {{0, 1}, {1, 2}});
    auto pp = profile(path, {0, 3, 1});
    CHECK(pp.q0 == 3);
    CHECK(pp.missingNodeLabels == std::vector<int>{2});
    CHECK(pp.missingEdgeLabels == std::vector<int>{1});
    REQUIRE(pp.rSets.count(1));
    CHECK(pp.rSets.at(1) == EdgeList{{0, 2}});

    // K2 labeled (0,2): Ebar={1}, R(1) empty (the only pair is an edge)
    Graph k2 = generate("complete", {2});
    auto kp = profile(k2, {0, 2});
    CHECK(kp.missingEdgeLabels == std::vector<int>{1});
    CHECK(kp.rSets.at(1).empty());

    CHECK_THROWS_AS(profile(c3, {0, 1}), std::invalid_argument);
}

TEST_CASE("profile/R consistency: inserting an R(e) pair moves e from Ebar to E") {
    Graph path = makeGraph(4, {{0, 1}, {1, 2}, {2, 3}});
    Labeling phi = {0, 4, 1, 2};  // diffs 4,3,1; missing 2 at pairs (0,3)(1,... )
    auto p = profile(path, phi);
    for (auto& [e, pairs] : p.rSets)
        for (auto [u, v] : pairs) {
            Graph h = path.plusEdge(u, v);
            auto hp = profile(h, phi);
            bool missing = std::find(hp.missingEdgeLabels.begin(), hp.missingEdgeLabels.end(), e) !=
                           hp.missingEdgeLabels.end();
            CHECK_FALSE(missing);
            bool present = std::binary_search(hp.edgeLabels.begin(), hp.edgeLabels.end(), e);
            CHECK(present);
        }
}

TEST_CASE("checkLabeling graceful") {
    Graph k4 = generate("complete", {4});
    CHECK(checkLabeling(k4, {0, 1, 4, 6}, LabelingKind::graceful()).ok);
    CHECK_FALSE(checkLabeling(k4, {0, 1, 2, 3}, LabelingKind::graceful()).ok);
    // graceful implies max label q and 0,q on an adjacent pair
    Graph c4 = generate("cycle", {4});
    Labeling w = {0, 4, 1, 2};
    REQUIRE(checkLabeling(c4, w, LabelingKind::graceful()).ok);
    int q = c4.size();
    CHECK(*std::max_element(w.begin(), w.end()) == q);
    int zi = -1, qi = -1;
    for (int v = 0; v < 4; ++v) {
        if (w[v] == 0) zi = v;
        if (w[v] == q) qi = v;
    }
    CHECK(c4.adjacent(zi, qi));
    // p > q+1 means graceful is impossible for any labeling
    Graph twoK2 = disjointUnion(generate("complete", {2}), generate("complete", {2}));
    CHECK_FALSE(checkLabeling(twoK2, {0, 1, 2, 3}, LabelingKind::graceful()).ok);
}

TEST_CASE("checkLabeling total and semitotal") {
    Graph k3 = generate("complete", {3});
    CHECK(checkLabeling(k3, {1, 4, 6}, LabelingKind::total()).ok);
    CHECK(checkLabeling(k3, {1, 4, 6}, LabelingKind::semitotal(0)).ok);
    CHECK_FALSE(checkLabeling(k3, {1, 2, 3}, LabelingKind::total()).ok);
    // slack widens the admissible range
    CHECK_FALSE(checkLabeling(k3, {2, 3, 7}, LabelingKind::total()).ok);
    CHECK(checkLabeling(k3, {2, 3, 7}, LabelingKind::semitotal(1)).ok);
}

TEST_CASE("checkLabeling prime, alpha, edgeDistinct") {
    Graph p4 = generate("pathEdges", {3});
    CHECK(checkLabeling(p4, {1, 2, 3, 4}, LabelingKind::prime()).ok);
    Graph k4 = generate("complete", {4});
    CHECK_FALSE(checkLabeling(k4, {1, 2, 3, 4}, LabelingKind::prime()).ok);

    CHECK(checkLabeling(p4, {0, 3, 1, 2}, LabelingKind::alpha()).ok);
    Graph c3 = generate("cycle", {3});
    CHECK(checkLabeling(c3, {0, 1, 3}, LabelingKind::graceful()).ok);
    CHECK_FALSE(checkLabeling(c3, {0, 1, 3}, LabelingKind::alpha()).ok);  // triangle is not bipartite

    CHECK(checkLabeling(c3, {0, 1, 5}, LabelingKind::edgeDistinct()).ok);
    CHECK_FALSE(checkLabeling(c3, {0, 1, 2}, LabelingKind::edgeDistinct()).ok);
}

TEST_CASE("complementary labeling") {
    Graph k2 = generate("complete", {2});
    CHECK(complementaryLabeling({0, 1}, 1) == Labeling{1, 0});
    Graph c3 = generate("cycle", {3});
    Labeling refl = complementaryLabeling({0, 1, 3}, 3);
    CHECK(refl == Labeling{3, 2, 0});
    CHECK(checkLabeling(c3, refl, LabelingKind::graceful()).ok);
    CHECK_THROWS_AS(complementaryLabeling({0, 5}, 3), std::invalid_argument);

    // reflection preserves the graceful verdict for arbitrary labelings
    Graph c4 = generate("cycle", {4});
    for (Labeling phi : {Labeling{0, 4, 1, 2}, Labeling{0, 1, 2, 4}, Labeling{1, 3, 0, 4}}) {
        int q = c4.size();
        CHECK(checkLabeling(c4, phi, LabelingKind::graceful()).ok ==
              checkLabeling(c4, complementaryLabeling(phi, q), LabelingKind::graceful()).ok);
    }
}

TEST_CASE("shiftSubset") {
    Labeling phi = {0, 3, 1, 2};
    CHECK(shiftSubset(phi, {}, 5) == phi);
    CHECK(shiftSubset(phi, {1, 3}, 2) == Labeling{0, 5, 1, 4});
    CHECK_THROWS_AS(shiftSubset(phi, {9}, 1), std::invalid_argument);
}
