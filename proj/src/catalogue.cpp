#include "labelkit/catalogue.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "labelkit/labeling.hpp"

namespace labelkit {

namespace {
constexpr const char* kToolVersion = "labelkit 0.1.0";
}

nlohmann::json CatalogueEntry::toJson() const {
    nlohmann::json j{{"key", key}, {"property", property}, {"status", status}, {"nodes", nodes},
                     {"toolVersion", toolVersion.empty() ? kToolVersion : toolVersion}};
    if (witness) j["witness"] = *witness;
    if (!timestamp.empty()) j["timestamp"] = timestamp;
    return j;
}

CatalogueEntry CatalogueEntry::fromJson(const nlohmann::json& j) {
    CatalogueEntry e;
    e.key = j.at("key").get<std::string>();
    e.property = j.at("property").get<std::string>();
    e.status = j.at("status").get<std::string>();
    e.nodes = j.value("nodes", uint64_t{0});
    e.toolVersion = j.value("toolVersion", "");
    e.timestamp = j.value("timestamp", "");
    if (j.contains("witness")) e.witness = j.at("witness").get<Labeling>();
    return e;
}

std::vector<CatalogueEntry> catalogueLoad(const std::string& path) {
    std::vector<CatalogueEntry> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(CatalogueEntry::fromJson(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineNo) + ": " + e.what());
        }
    }
    return out;
}

size_t catalogueAppend(const std::string& path, const std::vector<CatalogueEntry>& entries) {
    auto existing = catalogueLoad(path);
    std::map<std::pair<std::string, std::string>, std::string> statusOf;
    for (auto& e : existing) statusOf[{e.key, e.property}] = e.status;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("catalogueAppend: cannot open " + path);
    size_t written = 0;
    for (auto& e : entries) {
        auto it = statusOf.find({e.key, e.property});
        if (it != statusOf.end()) {
            if (it->second != e.status)
                throw std::runtime_error("catalogueAppend: conflicting status for (" + e.key + ", " +
                                         e.property + "): " + it->second + " vs " + e.status);
            continue;  // idempotent re-append
        }
        out << e.toJson().dump() << '\n';
        statusOf[{e.key, e.property}] = e.status;
        ++written;
    }
    return written;
}

CatalogueValidation catalogueValidate(const std::string& path) {
    CatalogueValidation v;
    for (auto& e : catalogueLoad(path)) {
        ++v.entries;
        if (!e.witness) continue;
        ++v.witnesses;
        Graph g = fromGraph6(e.key);
        LabelingKind kind = LabelingKind::graceful();
        if (e.property == "total") kind = LabelingKind::total();
        else if (e.property == "prime") kind = LabelingKind::prime();
        if (!checkLabeling(g, *e.witness, kind).ok) v.failures.push_back(e.key);
    }
    return v;
}

CatalogueEntry censusEntryToCatalogue(const CensusEntry& e, const std::string& property) {
    CatalogueEntry out;
    out.key = e.key;
    out.property = property;
    out.status = statusName(e.status);
    out.witness = e.witness;
    out.nodes = e.nodes;
    return out;
}

}  // namespace labelkit
