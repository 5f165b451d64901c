// Command-line surface for the graph labeling workbench: generators,
// labeling checks, exhaustive solvers, constructions, censuses and audits.
//
// Exit codes: 0 property holds / witness found, 1 refuted / exhausted,
// 2 usage or I/O error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "labelkit/audits.hpp"
#include "labelkit/canonical.hpp"
#include "labelkit/catalogue.hpp"
#include "labelkit/conditions.hpp"
#include "labelkit/construct.hpp"
#include "labelkit/enumerate.hpp"
#include "labelkit/io.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/primegraph.hpp"
#include "labelkit/search.hpp"
#include "labelkit/treegen.hpp"

using namespace labelkit;
using nlohmann::json;

namespace {

enum ExitCode { ExitHolds = 0, ExitRefuted = 1, ExitUsage = 2, ExitBudget = 3 };

std::string readFile(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// graph specs: "family:p1,p2,...", "file:PATH" (edge list or graph6),
// "-" (edge list on stdin), or a raw graph6 string
Graph parseGraphSpec(const std::string& spec) {
    auto colon = spec.find(':');
    if (spec == "-") return fromEdgeListText(readFile("-"));
    if (colon != std::string::npos) {
        std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
        if (head == "file") {
            std::string text = readFile(rest);
            auto firstNonSpace = text.find_first_not_of(" \t\r\n");
            if (firstNonSpace != std::string::npos && std::isdigit((unsigned char)text[firstNonSpace]))
                return fromEdgeListText(text);
            return fromGraph6(text);
        }
        std::vector<int> params;
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) params.push_back(std::stoi(tok));
        return generate(head, params);
    }
    // try a bare family first (petersen etc.), then graph6
    try {
        return generate(spec, {});
    } catch (const std::invalid_argument&) {
        return fromGraph6(spec);
    }
}

void emitGraph(const Graph& g, const std::string& format, std::ostream& os) {
    if (format == "graph6") os << toGraph6(g) << '\n';
    else os << toEdgeListText(g);
}

json witnessJson(const std::optional<Labeling>& w) {
    return w ? json(*w) : json(nullptr);
}

json outcomeJson(const SearchOutcome& oc) {
    return {{"status", statusName(oc.status)},
            {"witness", witnessJson(oc.witness)},
            {"nodes", oc.stats.nodes}};
}

int statusExit(SearchOutcome::Status s) {
    switch (s) {
        case SearchOutcome::Status::Found: return ExitHolds;
        case SearchOutcome::Status::Exhausted: return ExitRefuted;
        case SearchOutcome::Status::BudgetExceeded: return ExitBudget;
    }
    return ExitUsage;
}

struct Config {
    uint64_t maxNodes = 10'000'000;
    uint64_t maxWallMs = 60'000;
    int jobs = 1;
    bool jsonOut = false;
    bool slow = false;
    SearchBudget budget() const { return {maxNodes, maxWallMs}; }
};

void applyConfigFile(const std::string& path, Config& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos || line[0] == '#') continue;
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "max-nodes") cfg.maxNodes = std::stoull(val);
        else if (key == "max-wall-ms") cfg.maxWallMs = std::stoull(val);
        else if (key == "jobs") cfg.jobs = std::stoi(val);
        else if (key == "format") cfg.jsonOut = (val == "json");
        else if (key == "slow") cfg.slow = (val == "1" || val == "true");
        else throw std::runtime_error("unknown config key: " + key);
    }
}

GraphKind parseUniverse(const std::string& name) {
    if (name == "trees") return GraphKind::Trees;
    if (name == "connected") return GraphKind::ConnectedGraphs;
    if (name == "all") return GraphKind::AllGraphs;
    if (name == "unicyclic") return GraphKind::Unicyclic;
    if (name == "eulerian") return GraphKind::EulerianFiltered;
    throw std::runtime_error("unknown universe: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph labeling workbench: exact searches, certificates, constructions, audits"};
    app.require_subcommand(1);

    Config cfg;
    std::string configPath;
    app.add_option("--config", configPath, "key=value config file (flags win)");
    app.add_option("--max-nodes", cfg.maxNodes, "search node budget per solve");
    app.add_option("--max-wall-ms", cfg.maxWallMs, "wall-clock budget per solve (ms)");
    app.add_option("--jobs", cfg.jobs, "worker count for census runs");
    app.add_flag("--json", cfg.jsonOut, "emit JSON instead of text");
    app.add_flag("--slow", cfg.slow, "enable slow-tier work in audits");

    auto* gen = app.add_subcommand("gen", "emit a generated or parsed graph");
    std::string genSpec, genFormat = "edgelist", genOut;
    gen->add_option("spec", genSpec, "graph spec, e.g. cycle:5, H:2,2,2, file:g.txt")->required();
    gen->add_option("--format", genFormat, "edgelist|graph6");
    gen->add_option("--out", genOut, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "verify a labeling or decide a property");
    std::string checkKind, checkGraph, checkLabelingPath;
    int checkSlack = 0;
    check->add_option("kind", checkKind, "graceful|totalLabeling|semitotal|prime|alpha|edgeDistinct")
        ->required();
    check->add_option("--graph", checkGraph)->required();
    check->add_option("--labeling", checkLabelingPath, "labeling file (u:label per line)");
    check->add_option("--slack", checkSlack, "semitotal slack");

    auto* search = app.add_subcommand("search", "run an exhaustive solver");
    std::string searchKind, searchGraph;
    std::vector<std::string> searchFixed;
    bool searchRequireOne = false, searchPendantN = false;
    search->add_option("kind", searchKind, "graceful|total|semitotal|prime")->required();
    search->add_option("--graph", searchGraph)->required();
    search->add_option("--fix", searchFixed, "node=label constraints (graceful)");
    search->add_flag("--require-one", searchRequireOne, "total/semitotal: require node label 1");
    search->add_flag("--pendant-n", searchPendantN, "prime: assign n to a pendant node");

    auto* opt = app.add_subcommand("opt", "minimal max-label edge-distinct labeling");
    std::string optGraph;
    opt->add_option("--graph", optGraph)->required();

    auto* embed = app.add_subcommand("embed", "graceful / supergraceful embeddings");
    std::string embedStrategy, embedGraph;
    embed->add_option("strategy", embedStrategy, "free|complete-host|induced|optimal|isolated|connected")
        ->required();
    embed->add_option("--graph", embedGraph)->required();

    auto* cons = app.add_subcommand("construct", "run a constructive operation");
    std::string consOp, consGraph;
    int consArg = 1;
    cons->add_option("op", consOp,
                     "apex|tree-total|grow-graceful|grow-total|grow-alpha|unicyclic|bump-top|"
                     "alpha-unicyclic-all|alpha-unicyclic-min|replicate|glue|non-prime-even|"
                     "non-prime-odd1|non-prime-odd3|non-prime-disconnected")
        ->required();
    cons->add_option("--graph", consGraph);
    cons->add_option("--arg", consArg, "numeric argument (t, c, copies or n)");

    auto* census = app.add_subcommand("census", "solver verdicts over an enumerated universe");
    std::string censusUniverse, censusProperty = "graceful", cataloguePath;
    int censusOrder = 0, censusMaxEdges = -1;
    census->add_option("--universe", censusUniverse, "trees|connected|all|unicyclic|eulerian")
        ->required();
    census->add_option("--order", censusOrder)->required();
    census->add_option("--max-edges", censusMaxEdges);
    census->add_option("--property", censusProperty, "graceful|total|prime");
    census->add_option("--catalogue", cataloguePath, "append results to a JSONL catalogue");

    auto* audit = app.add_subcommand("audit", "claim-by-claim desk audits");
    std::string auditTarget;
    audit->add_option("target", auditTarget,
                      "sp|table2|prop63|mu|tree-complete|rrk|unicyclic|attract|order6-nongraceful|"
                      "supergraceful-catalogue|critical|rg-eulerian")
        ->required();

    auto* cat = app.add_subcommand("catalogue", "validate or show a JSONL catalogue");
    std::string catAction, catFile;
    cat->add_option("action", catAction, "validate|show")->required();
    cat->add_option("--file", catFile)->required();

    try {
        app.parse(argc, argv);
        if (!configPath.empty()) {
            Config fileCfg;
            applyConfigFile(configPath, fileCfg);
            // flags win over file values
            if (!app.count("--max-nodes")) cfg.maxNodes = fileCfg.maxNodes;
            if (!app.count("--max-wall-ms")) cfg.maxWallMs = fileCfg.maxWallMs;
            if (!app.count("--jobs")) cfg.jobs = fileCfg.jobs;
            if (!app.count("--json")) cfg.jsonOut = fileCfg.jsonOut;
            if (!app.count("--slow")) cfg.slow = fileCfg.slow;
        }
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : ExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ExitUsage;
    }

    try {
        if (*gen) {
            Graph g = parseGraphSpec(genSpec);
            if (genOut.empty()) {
                emitGraph(g, genFormat, std::cout);
            } else {
                std::ofstream os(genOut);
                emitGraph(g, genFormat, os);
            }
            return ExitHolds;
        }

        if (*check) {
            Graph g = parseGraphSpec(checkGraph);
            if (!checkLabelingPath.empty()) {
                Labeling phi = fromLabelingText(readFile(checkLabelingPath));
                LabelingKind kind = LabelingKind::graceful();
                if (checkKind == "graceful") kind = LabelingKind::graceful();
                else if (checkKind == "totalLabeling") kind = LabelingKind::total();
                else if (checkKind == "semitotal") kind = LabelingKind::semitotal(checkSlack);
                else if (checkKind == "prime") kind = LabelingKind::prime();
                else if (checkKind == "alpha") kind = LabelingKind::alpha();
                else if (checkKind == "edgeDistinct") kind = LabelingKind::edgeDistinct();
                else throw std::runtime_error("unknown labeling kind: " + checkKind);
                auto r = checkLabeling(g, phi, kind);
                json verdict{{"kind", kind.name()}, {"ok", r.ok}, {"violations", r.violations}};
                std::cout << verdict.dump(2) << '\n';
                return r.ok ? ExitHolds : ExitRefuted;
            }
            // property decision: fast certificates first, then exhaustive search
            if (checkKind == "graceful") {
                for (auto rule : {"rosaGolomb", "binaryPartition"}) {
                    if (std::string(rule) == "binaryPartition" && g.order() > 14) continue;
                    auto c = certify(g, rule);
                    if (c.verdict == CertVerdict::Violated) {
                        json verdict{{"property", "graceful"},
                                     {"holds", false},
                                     {"certificate",
                                      {{"rule", c.rule}, {"verdict", "violated"}, {"witness", c.witness}}}};
                        std::cout << verdict.dump(2) << '\n';
                        return ExitRefuted;
                    }
                }
                auto oc = findGraceful(g, cfg.budget());
                json verdict{{"property", "graceful"}, {"holds", oc.found()}, {"outcome", outcomeJson(oc)}};
                std::cout << verdict.dump(2) << '\n';
                return statusExit(oc.status);
            }
            if (checkKind == "totalLabeling" || checkKind == "total") {
                auto c = certify(g, "joinEulerianNonSupergraceful");
                if (c.verdict == CertVerdict::Violated) {
                    json verdict{{"property", "total"},
                                 {"holds", false},
                                 {"certificate",
                                  {{"rule", c.rule}, {"verdict", "violated"}, {"witness", c.witness}}}};
                    std::cout << verdict.dump(2) << '\n';
                    return ExitRefuted;
                }
                auto oc = findTotal(g, cfg.budget());
                json verdict{{"property", "total"}, {"holds", oc.found()}, {"outcome", outcomeJson(oc)}};
                std::cout << verdict.dump(2) << '\n';
                return statusExit(oc.status);
            }
            if (checkKind == "prime") {
                for (auto rule : {"primeIndependence", "primeClique", "primeEdgeCount", "primeMinDegree"}) {
                    auto c = certify(g, rule);
                    if (c.verdict == CertVerdict::Violated) {
                        json verdict{{"property", "prime"},
                                     {"holds", false},
                                     {"certificate",
                                      {{"rule", c.rule}, {"verdict", "violated"}, {"witness", c.witness}}}};
                        std::cout << verdict.dump(2) << '\n';
                        return ExitRefuted;
                    }
                }
                auto oc = findPrime(g, cfg.budget());
                json verdict{{"property", "prime"}, {"holds", oc.found()}, {"outcome", outcomeJson(oc)}};
                std::cout << verdict.dump(2) << '\n';
                return statusExit(oc.status);
            }
            throw std::runtime_error("property decision supports graceful|total|prime");
        }

        if (*search) {
            Graph g = parseGraphSpec(searchGraph);
            if (searchKind == "graceful") {
                GracefulConstraints consr;
                for (auto& f : searchFixed) {
                    auto eq = f.find('=');
                    if (eq == std::string::npos) throw std::runtime_error("--fix wants node=label");
                    consr.fixedNodeLabels.push_back(
                        {std::stoi(f.substr(0, eq)), std::stoi(f.substr(eq + 1))});
                }
                auto oc = findGraceful(g, cfg.budget(), consr);
                std::cout << outcomeJson(oc).dump(2) << '\n';
                return statusExit(oc.status);
            }
            if (searchKind == "total") {
                auto oc = findTotal(g, cfg.budget(), searchRequireOne);
                std::cout << outcomeJson(oc).dump(2) << '\n';
                return statusExit(oc.status);
            }
            if (searchKind == "semitotal") {
                auto r = findSemitotal(g, cfg.budget(), searchRequireOne);
                json j{{"slack", r.slack}, {"witness", r.witness}, {"nodes", r.stats.nodes},
                       {"budgetExceeded", r.budgetExceeded}};
                std::cout << j.dump(2) << '\n';
                return r.budgetExceeded ? ExitBudget : ExitHolds;
            }
            if (searchKind == "prime") {
                auto oc = findPrime(g, cfg.budget(), searchPendantN);
                std::cout << outcomeJson(oc).dump(2) << '\n';
                return statusExit(oc.status);
            }
            throw std::runtime_error("unknown search kind: " + searchKind);
        }

        if (*opt) {
            Graph g = parseGraphSpec(optGraph);
            auto r = findOptimal(g, cfg.budget());
            json j{{"opt", r.opt}, {"witness", r.witness}, {"nodes", r.stats.nodes},
                   {"budgetExceeded", r.budgetExceeded}};
            std::cout << j.dump(2) << '\n';
            return r.budgetExceeded ? ExitBudget : ExitHolds;
        }

        if (*embed) {
            Graph g = parseGraphSpec(embedGraph);
            auto emitEmbedding = [&](const EmbeddingResult& e) {
                json j{{"host", toGraph6(e.host)},
                       {"labeling", e.hostLabeling},
                       {"injection", e.injection},
                       {"induced", e.induced}};
                std::cout << j.dump(2) << '\n';
            };
            if (embedStrategy == "free")
                emitEmbedding(embedGraceful(g, EmbedStrategy::FreeLabeling, cfg.budget()));
            else if (embedStrategy == "complete-host")
                emitEmbedding(embedGraceful(g, EmbedStrategy::CompleteHost, cfg.budget()));
            else if (embedStrategy == "induced")
                emitEmbedding(embedGraceful(g, EmbedStrategy::InducedHost, cfg.budget()));
            else if (embedStrategy == "optimal") {
                auto auditRes = optimalEmbeddingAudit(g, cfg.budget());
                json hosts = json::array();
                for (auto& h : auditRes.minimalHosts)
                    hosts.push_back({{"host", toGraph6(h.host)},
                                     {"labeling", h.hostLabeling},
                                     {"connected", h.host.connected()}});
                json j{{"optOrder", auditRes.optOrder},
                       {"labelingsTried", auditRes.labelingsTried},
                       {"allConnected", auditRes.allConnected},
                       {"minimalHosts", hosts}};
                std::cout << j.dump(2) << '\n';
            } else if (embedStrategy == "isolated" || embedStrategy == "connected") {
                auto st = findSemitotal(g, cfg.budget(), embedStrategy == "connected");
                emitEmbedding(embedSupergraceful(g, st.witness,
                                                 embedStrategy == "isolated"
                                                     ? SupergracefulEmbedMode::IsolatedCover
                                                     : SupergracefulEmbedMode::ConnectedPendants));
            } else {
                throw std::runtime_error("unknown embed strategy: " + embedStrategy);
            }
            return ExitHolds;
        }

        if (*cons) {
            auto emitLabeled = [&](const LabeledGraph& lg) {
                json j{{"graph", toGraph6(lg.graph)}, {"labeling", lg.labeling}};
                std::cout << j.dump(2) << '\n';
            };
            if (consOp == "non-prime-even" || consOp == "non-prime-odd1" ||
                consOp == "non-prime-odd3" || consOp == "non-prime-disconnected") {
                NonPrimeFamily fam = consOp == "non-prime-even"   ? NonPrimeFamily::ConnectedEven
                                     : consOp == "non-prime-odd1" ? NonPrimeFamily::ConnectedOdd1
                                     : consOp == "non-prime-odd3" ? NonPrimeFamily::ConnectedOdd3
                                                                  : NonPrimeFamily::Disconnected;
                Graph g = nonPrimeExtremal(consArg, fam);
                emitGraph(g, "graph6", std::cout);
                return ExitHolds;
            }
            Graph g = parseGraphSpec(consGraph);
            auto needGraceful = [&]() {
                auto oc = findGraceful(g, cfg.budget());
                if (!oc.found()) throw std::runtime_error("input graph is not graceful");
                return *oc.witness;
            };
            auto needAlpha = [&]() {
                Labeling w = needGraceful();
                if (!checkLabeling(g, w, LabelingKind::alpha()).ok)
                    throw std::runtime_error("solver witness is not an alpha labeling");
                return w;
            };
            if (consOp == "apex") {
                auto total = findTotal(g, cfg.budget());
                if (!total.found()) return statusExit(total.status);
                emitLabeled(apexGraceful(g, *total.witness));
            } else if (consOp == "tree-total") {
                json j{{"graph", toGraph6(g)}, {"labeling", treeTotalFromGraceful(g, needGraceful())}};
                std::cout << j.dump(2) << '\n';
            } else if (consOp == "grow-graceful") {
                emitLabeled(growPendants(g, needGraceful(), PendantMode::GracefulAtZero, consArg));
            } else if (consOp == "grow-total" || consOp == "grow-alpha") {
                auto oc = findTotal(g, cfg.budget(), consOp == "grow-total");
                if (!oc.found()) return statusExit(oc.status);
                emitLabeled(growPendants(g, *oc.witness,
                                         consOp == "grow-total" ? PendantMode::TotalAtOne
                                                                : PendantMode::TotalStepAlpha,
                                         consArg));
            } else if (consOp == "unicyclic" || consOp == "bump-top") {
                Labeling w = needGraceful();
                auto outs = consOp == "unicyclic" ? unicyclicFromTree(g, w)
                                                  : bumpTopAndComplete(g, w, consArg);
                json arr = json::array();
                for (auto& lg : outs)
                    arr.push_back({{"graph", toGraph6(lg.graph)}, {"labeling", lg.labeling}});
                std::cout << arr.dump(2) << '\n';
            } else if (consOp == "alpha-unicyclic-all" || consOp == "alpha-unicyclic-min") {
                auto r = alphaUnicyclic(g, needAlpha(),
                                        consOp == "alpha-unicyclic-all"
                                            ? AlphaUnicyclicVariant::ShiftAllB
                                            : AlphaUnicyclicVariant::ShiftBExceptMin);
                json j{{"graph", toGraph6(r.graph)}, {"labeling", r.labeling},
                       {"cycleLength", r.cycleLength}};
                std::cout << j.dump(2) << '\n';
            } else if (consOp == "replicate") {
                emitLabeled(replicatePartition(g, needAlpha(), consArg));
            } else if (consOp == "glue") {
                Labeling w = needAlpha();
                emitLabeled(glueAlpha(g, w, w));
            } else {
                throw std::runtime_error("unknown construct op: " + consOp);
            }
            return ExitHolds;
        }

        if (*census) {
            auto kind = parseUniverse(censusUniverse);
            EnumOptions opts;
            opts.maxEdges = censusMaxEdges;
            auto universe = enumerateGraphs(kind, censusOrder, opts);
            Property prop = censusProperty == "total"   ? Property::Total
                            : censusProperty == "prime" ? Property::Prime
                                                        : Property::Graceful;
            auto report = censusRun(universe, censusUniverse + ":" + std::to_string(censusOrder),
                                    prop, cfg.budget(), cfg.jobs);
            for (auto& e : report.entries) {
                json line{{"key", e.key},
                          {"property", report.property},
                          {"status", statusName(e.status)},
                          {"stats", {{"nodes", e.nodes}}}};
                if (e.witness) line["witness"] = *e.witness;
                std::cout << line.dump() << '\n';
            }
            std::cerr << report.universe << ": " << report.entries.size() << " classes, "
                      << report.found << " found, " << report.exhausted << " exhausted, "
                      << report.budgetExceeded << " budget-exceeded\n";
            if (!cataloguePath.empty()) {
                std::vector<CatalogueEntry> entries;
                for (auto& e : report.entries)
                    entries.push_back(censusEntryToCatalogue(e, report.property));
                size_t written = catalogueAppend(cataloguePath, entries);
                std::cerr << "catalogue: " << written << " new entries\n";
            }
            if (report.budgetExceeded) return ExitBudget;
            return ExitHolds;
        }

        if (*audit) {
            AuditOutcome outcome;
            if (auditTarget == "sp") outcome = auditSp();
            else if (auditTarget == "table2") outcome = auditTable2();
            else if (auditTarget == "prop63") outcome = auditProp63();
            else if (auditTarget == "mu") outcome = auditMu(cfg.slow, cfg.budget());
            else if (auditTarget == "tree-complete") outcome = auditTreeComplete(cfg.slow, cfg.budget());
            else if (auditTarget == "rrk") outcome = auditRrk();
            else if (auditTarget == "unicyclic") outcome = auditUnicyclicGraceful(cfg.budget());
            else if (auditTarget == "attract") outcome = auditAttract(cfg.budget());
            else if (auditTarget == "order6-nongraceful") outcome = auditOrder6NonGraceful(cfg.budget());
            else if (auditTarget == "supergraceful-catalogue")
                outcome = auditSupergracefulCatalogue(cfg.budget());
            else if (auditTarget == "critical") outcome = auditCritical(cfg.budget());
            else if (auditTarget == "rg-eulerian") outcome = auditRgEulerian(cfg.budget());
            else throw std::runtime_error("unknown audit target: " + auditTarget);
            json j{{"audit", outcome.name}, {"pass", outcome.pass}, {"report", outcome.report}};
            std::cout << j.dump(2) << '\n';
            return outcome.pass ? ExitHolds : ExitRefuted;
        }

        if (*cat) {
            if (catAction == "validate") {
                auto v = catalogueValidate(catFile);
                json j{{"entries", v.entries}, {"witnesses", v.witnesses}, {"failures", v.failures}};
                std::cout << j.dump(2) << '\n';
                return v.failures.empty() ? ExitHolds : ExitRefuted;
            }
            if (catAction == "show") {
                for (auto& e : catalogueLoad(catFile)) std::cout << e.toJson().dump() << '\n';
                return ExitHolds;
            }
            throw std::runtime_error("unknown catalogue action: " + catAction);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ExitUsage;
    }
    return ExitUsage;
}
