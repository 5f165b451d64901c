#include "doctest.h"

#include <stdexcept>

#include "labelkit/conditions.hpp"
#include "labelkit/enumerate.hpp"
#include "labelkit/labeling.hpp"

using namespace labelkit;

TEST_CASE("rosaGolomb certificate") {
    auto c5 = certify(generate("cycle", {5}), "rosaGolomb");
    CHECK(c5.verdict == CertVerdict::Violated);  // eulerian, q = 5 = 1 mod 4
    auto c8 = certify(generate("cycle", {8}), "rosaGolomb");
    CHECK(c8.verdict == CertVerdict::Satisfied);
    auto star = certify(generate("star", {3}), "rosaGolomb");
    CHECK(star.verdict == CertVerdict::Inapplicable);
    auto k5 = certify(generate("complete", {5}), "rosaGolomb");
    CHECK(k5.verdict == CertVerdict::Violated);  // q = 10 = 2 mod 4
}

TEST_CASE("binaryPartition certificate") {
    // K5 cross-edge counts a(5-a) in {0,4,6}, never ceil(10/2)=5
    auto k5 = certify(generate("complete", {5}), "binaryPartition");
    CHECK(k5.verdict == CertVerdict::Violated);
    auto c4 = certify(generate("cycle", {4}), "binaryPartition");
    CHECK(c4.verdict == CertVerdict::Satisfied);
    // K6 passes the binary screen even though it is non-graceful
    auto k6 = certify(generate("complete", {6}), "binaryPartition");
    CHECK(k6.verdict == CertVerdict::Satisfied);
}

TEST_CASE("naryPartition certificate is sound and n=2 matches binary") {
    // C3 is graceful, so no sound certificate may flag it at any n
    for (int n = 2; n <= 5; ++n) {
        auto c = certify(generate("cycle", {3}), "naryPartition", {{"n", n}});
        CHECK(c.verdict == CertVerdict::Satisfied);
    }
    for (int order = 2; order <= 6; ++order)
        for (auto& g : enumerateGraphs(GraphKind::ConnectedGraphs, order)) {
            auto bin = certify(g, "binaryPartition");
            auto nary = certify(g, "naryPartition", {{"n", 2}});
            CHECK((bin.verdict == CertVerdict::Satisfied) ==
                  (nary.verdict == CertVerdict::Satisfied));
        }
}

TEST_CASE("graceful-certificate soundness over all connected graphs with p <= 6") {
    for (int order = 2; order <= 6; ++order)
        for (auto& g : enumerateGraphs(GraphKind::ConnectedGraphs, order)) {
            bool graceful = findGraceful(g).found();
            auto rg = certify(g, "rosaGolomb");
            auto bin = certify(g, "binaryPartition");
            if (rg.verdict == CertVerdict::Violated) CHECK_FALSE(graceful);
            if (bin.verdict == CertVerdict::Violated) CHECK_FALSE(graceful);
            // Thm 2.2 necessity: graceful graphs are never flagged
            if (graceful) CHECK(bin.verdict == CertVerdict::Satisfied);
            for (int n = 3; n <= 5; ++n) {
                auto nary = certify(g, "naryPartition", {{"n", n}});
                if (nary.verdict == CertVerdict::Violated) CHECK_FALSE(graceful);
            }
        }
}

TEST_CASE("naryPartitionVerify holds for graceful labelings") {
    Graph c4 = generate("cycle", {4});
    auto oc = findGraceful(c4);
    REQUIRE(oc.found());
    for (int n = 2; n <= 5; ++n) {
        auto v = naryPartitionVerify(c4, *oc.witness, n);
        CHECK(v.ok);
    }
}

TEST_CASE("joinEulerianNonSupergraceful certificate") {
    auto pet = certify(generate("petersen", {}), "joinEulerianNonSupergraceful");
    CHECK(pet.verdict == CertVerdict::Violated);  // K1+Petersen eulerian, 25 = 1 mod 4
    auto k4 = certify(generate("complete", {4}), "joinEulerianNonSupergraceful");
    CHECK(k4.verdict == CertVerdict::Violated);  // K1+K4 = K5 eulerian, 10 = 2 mod 4
    auto c4 = certify(generate("cycle", {4}), "joinEulerianNonSupergraceful");
    CHECK(c4.verdict == CertVerdict::Inapplicable);  // even degrees, K1+C4 not eulerian
    auto q3 = certify(generate("hypercube", {3}), "joinEulerianNonSupergraceful");
    CHECK(q3.verdict == CertVerdict::Satisfied);  // K1+Q3 eulerian with 20 = 0 mod 4

    // soundness: violated implies findTotal exhausts (K4, W7 and all flagged order <= 5)
    CHECK(findTotal(generate("complete", {4})).exhausted());
    Graph w7 = generate("wheel", {7});
    CHECK(certify(w7, "joinEulerianNonSupergraceful").verdict == CertVerdict::Violated);
    CHECK(findTotal(w7).exhausted());
    for (int order = 2; order <= 5; ++order)
        for (auto& g : enumerateGraphs(GraphKind::AllGraphs, order))
            if (certify(g, "joinEulerianNonSupergraceful").verdict == CertVerdict::Violated)
                CHECK(findTotal(g).exhausted());
}

TEST_CASE("prime certificates sound against findPrime for all graphs with p <= 6") {
    for (int order = 1; order <= 6; ++order)
        for (auto& g : enumerateGraphs(GraphKind::AllGraphs, order)) {
            bool violated = false;
            for (auto rule : {"primeIndependence", "primeClique", "primeEdgeCount", "primeMinDegree"})
                if (certify(g, rule).verdict == CertVerdict::Violated) violated = true;
            if (violated) CHECK(findPrime(g).exhausted());
        }
    // spot values
    CHECK(certify(disjointUnion(generate("complete", {3}), generate("complete", {3})),
                  "primeIndependence")
              .verdict == CertVerdict::Violated);
    CHECK(certify(generate("complete", {4}), "primeClique").verdict == CertVerdict::Violated);
}

TEST_CASE("allCyclesMod4Zero certificate") {
    CHECK(certify(generate("cycle", {8}), "allCyclesMod4Zero").verdict == CertVerdict::Satisfied);
    CHECK(certify(generate("cycle", {6}), "allCyclesMod4Zero").verdict == CertVerdict::Violated);
    CHECK(certify(generate("pathEdges", {5}), "allCyclesMod4Zero").verdict == CertVerdict::Satisfied);
}

TEST_CASE("forbiddenPatternScan") {
    Graph bowtie = coalesce(generate("cycle", {3}), 0, generate("cycle", {3}), 0);
    auto hits = forbiddenPatternScan(bowtie);
    bool p2 = false;
    for (auto& h : hits)
        if (h.pattern == 2) p2 = true;
    CHECK(p2);

    CHECK(forbiddenPatternScan(generate("cycle", {8})).empty());

    auto c5hits = forbiddenPatternScan(generate("cycle", {5}));
    REQUIRE(c5hits.size() == 1);
    CHECK(c5hits[0].pattern == 1);

    // pattern 3: C4 sharing one node with each of two disjoint triangles
    Graph c4 = generate("cycle", {4});
    Graph g = coalesce(c4, 0, generate("cycle", {3}), 0);
    g = coalesce(g, 2, generate("cycle", {3}), 0);
    bool p3 = false;
    for (auto& h : forbiddenPatternScan(g))
        if (h.pattern == 3) p3 = true;
    CHECK(p3);
}

TEST_CASE("thirdCycleMod4 and Table 1 audit") {
    CHECK(thirdCycleMod4(4, 4, 2) == 2);  // two C4 sharing one edge -> C6
    CHECK(thirdCycleMod4(3, 3, 2) == 0);  // two C3 sharing one edge -> C4
    CHECK(thirdCycleMod4(4, 4, 1) == 0);  // degenerate single shared node

    // explicit 6-node check: two C4s sharing one edge produce a C6
    Graph twoC4 = makeGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 2}});
    auto inv = cycleInventory(twoC4);
    std::vector<int> lens;
    for (auto& [m, l] : inv) lens.push_back(l);
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<int>{4, 4, 6});

    auto rows = table1Audit();
    size_t nodeMatch = 0, edgeMatch = 0, degenerate = 0;
    for (auto& r : rows) {
        if (r.nodeMatches) ++nodeMatch;
        if (r.edgeMatches) ++edgeMatch;
        if (r.degenerate) ++degenerate;
    }
    // Table 1 agrees with the shared-edge-count reading everywhere and with
    // the node-count reading nowhere; the audit records the disagreement.
    CHECK(edgeMatch == rows.size());
    CHECK(nodeMatch == 0);
    CHECK(degenerate == 16);
}

TEST_CASE("highlyGracefulAudit and criticalAudit") {
    CHECK(highlyGracefulAudit(generate("cycle", {4})).verdict);
    CHECK(highlyGracefulAudit(generate("pathEdges", {3})).verdict);
    auto c6 = highlyGracefulAudit(generate("cycle", {6}));
    CHECK_FALSE(c6.verdict);
    REQUIRE(c6.failingSubgraph.has_value());
    CHECK(c6.failingSubgraph->size() == 6);  // C6 itself is the failure

    CHECK(criticalAudit(generate("cycle", {5})).verdict);
    CHECK(criticalAudit(generate("cycle", {6})).verdict);
    CHECK_FALSE(criticalAudit(generate("cycle", {4})).verdict);  // graceful, not critical
    // bowtie: Conjecture 3.2 support, every proper connected subgraph graceful
    Graph bowtie = coalesce(generate("cycle", {3}), 0, generate("cycle", {3}), 0);
    CHECK(criticalAudit(bowtie).verdict);
    // K5 contains the non-graceful C5 properly
    CHECK_FALSE(criticalAudit(generate("complete", {5})).verdict);
}
