#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "labelkit/io.hpp"
#include "labelkit/search.hpp"

namespace labelkit {

struct CatalogueEntry {
    std::string key;       // canonical graph6
    std::string property;  // e.g. graceful / total / prime
    std::string status;    // found / exhausted / budget-exceeded
    std::optional<Labeling> witness;
    uint64_t nodes = 0;
    std::string toolVersion;
    std::string timestamp;  // empty in deterministic runs

    nlohmann::json toJson() const;
    static CatalogueEntry fromJson(const nlohmann::json& j);
};

// JSONL append with dedup on (key, property); re-appending an identical
// status writes nothing, a conflicting status is an error, never a silent
// overwrite. Returns the number of entries written.
size_t catalogueAppend(const std::string& path, const std::vector<CatalogueEntry>& entries);

std::vector<CatalogueEntry> catalogueLoad(const std::string& path);

// re-validate every found witness in a catalogue against its graph
struct CatalogueValidation {
    size_t entries = 0;
    size_t witnesses = 0;
    std::vector<std::string> failures;  // keys whose witness fails its check
};
CatalogueValidation catalogueValidate(const std::string& path);

CatalogueEntry censusEntryToCatalogue(const CensusEntry& e, const std::string& property);

}  // namespace labelkit
