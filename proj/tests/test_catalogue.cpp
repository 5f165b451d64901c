#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "labelkit/catalogue.hpp"
#include "labelkit/canonical.hpp"
#include "labelkit/enumerate.hpp"

using namespace labelkit;

namespace {

struct TempFile {
    std::string path;
    TempFile() {
        path = (std::filesystem::temp_directory_path() / "labelkit_catalogue_test.jsonl").string();
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("catalogueAppend is idempotent and rejects conflicts") {
    TempFile tmp;
    auto trees = enumerateGraphs(GraphKind::Trees, 7);
    auto report = censusRun(trees, "trees:7", Property::Graceful);
    std::vector<CatalogueEntry> entries;
    for (auto& e : report.entries) entries.push_back(censusEntryToCatalogue(e, "graceful"));
    CHECK(catalogueAppend(tmp.path, entries) == entries.size());
    CHECK(catalogueAppend(tmp.path, entries) == 0);  // second append writes nothing

    auto loaded = catalogueLoad(tmp.path);
    CHECK(loaded.size() == entries.size());

    // conflicting status is an error, never a silent overwrite
    auto bad = entries;
    bad[0].status = "exhausted";
    CHECK_THROWS_AS(catalogueAppend(tmp.path, {bad[0]}), std::runtime_error);

    // empty append
    CHECK(catalogueAppend(tmp.path, {}) == 0);
}

TEST_CASE("catalogueValidate re-checks stored witnesses") {
    TempFile tmp;
    auto trees = enumerateGraphs(GraphKind::Trees, 6);
    auto report = censusRun(trees, "trees:6", Property::Graceful);
    std::vector<CatalogueEntry> entries;
    for (auto& e : report.entries) entries.push_back(censusEntryToCatalogue(e, "graceful"));
    catalogueAppend(tmp.path, entries);
    auto v = catalogueValidate(tmp.path);
    CHECK(v.entries == 6);
    CHECK(v.witnesses == 6);
    CHECK(v.failures.empty());
}
