// Acceptance suite: one pass/fail line per criterion. A criterion either
// audits a family of exact computations against pinned expected values or
// replays a determinism contract. `--slow` enables the slow-tier additions,
// `--only <id>` runs a single criterion, `--reports <dir>` dumps the JSON
// reports.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "labelkit/audits.hpp"
#include "labelkit/search.hpp"

using namespace labelkit;
using nlohmann::json;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::function<AuditOutcome(bool slow)> run;
};

std::string summarize(const AuditOutcome& o) {
    // one short load-bearing detail per criterion
    const json& r = o.report;
    if (o.id == "A1")
        return "non-graceful classes: " + std::to_string(r.value("nonGracefulCount", size_t{0})) +
               ", H(2,2,2) join: " + r.value("H222joinStatus", std::string{});
    if (o.id == "A2") {
        size_t mismatches = 0;
        for (auto& row : r.at("rows"))
            if (!row.at("match").get<bool>()) ++mismatches;
        return std::to_string(mismatches) + " of 20 rows disagree with the printed table";
    }
    if (o.id == "A6") return "mu(6) witnesses: " + std::to_string(r.at("mu6witnesses").size());
    if (o.id == "A11")
        return "outputs: " + std::to_string(r.value("outputsProduced", size_t{0})) +
               ", self-check failures: " + std::to_string(r.value("selfCheckFailures", size_t{0}));
    if (o.id == "A12")
        return "order-8 min critical size: " +
               std::to_string(r.value("order8MinCriticalSize", -1)) +
               " (plain non-graceful min: " + std::to_string(r.value("order8MinNonGracefulSize", -1)) +
               ")";
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    std::string only, reportsDir;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--slow") slow = true;
        else if (a == "--only" && i + 1 < argc) only = argv[++i];
        else if (a == "--reports" && i + 1 < argc) reportsDir = argv[++i];
        else {
            std::fprintf(stderr, "usage: acceptance [--slow] [--only Ax] [--reports dir]\n");
            return 2;
        }
    }

    std::vector<Criterion> criteria = {
        {"A1", "order-<=6 graceful census", [](bool) { return auditOrder6NonGraceful(); }},
        {"A2", "super-prime edge-count table vs the printed row",
         [](bool) { return auditTable2(); }},
        {"A3", "selection counts and the order-4 refutation", [](bool) { return auditProp63(); }},
        {"A4", "supergraceful catalogue p <= 5", [](bool) { return auditSupergracefulCatalogue(); }},
        {"A5", "unicyclic supergraceful <= 6", [](bool) { return auditUnicyclicTotal(); }},
        {"A6", "minimum non-prime edge counts", [](bool s) { return auditMu(s); }},
        {"A7", "unicyclic graceful census <= 8", [](bool) { return auditUnicyclicGraceful(); }},
        {"A8", "graceful tree census <= 9", [](bool) { return auditRrk(); }},
        {"A9", "attractiveness", [](bool) { return auditAttract(); }},
        {"A10", "prime tree completeness", [](bool s) { return auditTreeComplete(s); }},
        {"A11", "construction self-verification sweep", [](bool) { return auditConstructions(); }},
        {"A13", "super-prime structure audit", [](bool) { return auditSp(); }},
    };
    // A12 is slow-tier work; it runs only under --slow unless requested directly
    Criterion a12{"A12", "eulerian criticality minima (slow tier)",
                  [](bool) { return auditRgEulerian(); }};

    bool allPass = true;
    std::map<std::string, std::string> reports;

    auto runOne = [&](const Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        AuditOutcome outcome = c.run(slow);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::string detail = summarize(outcome);
        std::printf("%-4s %-4s %s (%lldms)%s%s\n", outcome.id.c_str(),
                    outcome.pass ? "PASS" : "FAIL", c.title.c_str(), (long long)ms,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!outcome.pass) {
            allPass = false;
            if (outcome.id == "A2") {
                for (auto& row : outcome.report.at("rows"))
                    if (!row.at("match").get<bool>())
                        std::printf("     n=%2d computed=%lld printed=%lld\n",
                                    row.at("n").get<int>(), row.at("computed").get<long long>(),
                                    row.at("paper").get<long long>());
                std::printf(
                    "     The printed row contradicts the table's own totient identity from n=15\n"
                    "     (sum of phi(2..15) = 71, printed 81); the computed row is asserted by an\n"
                    "     independent gcd pair count. See the decisions ledger for the analysis.\n");
            } else {
                std::printf("     report: %s\n", outcome.report.dump().c_str());
            }
        }
        reports[outcome.id] = outcome.report.dump();
        return outcome;
    };

    for (auto& c : criteria) {
        if (!only.empty() && only != c.id) continue;
        runOne(c);
    }
    if (only == "A12" || (only.empty() && slow)) {
        runOne(a12);
    } else if (only.empty()) {
        std::printf("A12  SKIP eulerian criticality minima (slow tier; run with --slow)\n");
    }

    // A14: byte-identical reports across a full re-run of the default tier
    if (only.empty() || only == "A14") {
        bool deterministic = true;
        std::vector<std::string> divergent;
        for (auto& c : criteria) {
            AuditOutcome again = c.run(slow);
            auto it = reports.find(again.id);
            std::string dump = again.report.dump();
            if (it == reports.end()) {
                reports[again.id] = dump;  // --only A14: first run happens here
                AuditOutcome third = c.run(slow);
                if (third.report.dump() != dump) {
                    deterministic = false;
                    divergent.push_back(again.id);
                }
            } else if (it->second != dump) {
                deterministic = false;
                divergent.push_back(again.id);
            }
        }
        std::printf("A14  %-4s byte-identical JSON reports across a full re-run\n",
                    deterministic ? "PASS" : "FAIL");
        for (auto& id : divergent) std::printf("     divergent report: %s\n", id.c_str());
        if (!deterministic) allPass = false;
    }

    if (!reportsDir.empty()) {
        std::filesystem::create_directories(reportsDir);
        for (auto& [id, dump] : reports) {
            std::ofstream out(reportsDir + "/" + id + ".json");
            out << dump << '\n';
        }
    }
    return allPass ? 0 : 1;
}
