#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "labelkit/search.hpp"

namespace labelkit {

struct AuditOutcome {
    std::string id;    // A1..A13 for the acceptance-mapped audits
    std::string name;
    bool pass = false;
    nlohmann::json report;  // deterministic: no wall-clock content
};

AuditOutcome auditOrder6NonGraceful(const SearchBudget& budget = {});   // A1
AuditOutcome auditTable2();                                             // A2
AuditOutcome auditProp63();                                             // A3
AuditOutcome auditSupergracefulCatalogue(const SearchBudget& = {});     // A4
AuditOutcome auditUnicyclicTotal(const SearchBudget& = {});             // A5
AuditOutcome auditMu(bool slowTier, const SearchBudget& = {});          // A6
AuditOutcome auditUnicyclicGraceful(const SearchBudget& = {});          // A7
AuditOutcome auditRrk();                                                // A8
AuditOutcome auditAttract(const SearchBudget& = {});                    // A9
AuditOutcome auditTreeComplete(bool slowTier, const SearchBudget& = {});// A10
AuditOutcome auditConstructions(const SearchBudget& = {});              // A11
AuditOutcome auditRgEulerian(const SearchBudget& = {});                 // A12 (slow tier)
AuditOutcome auditSp();                                                 // A13

// extra CLI audit target: criticality of the small cycles and the bowtie
AuditOutcome auditCritical(const SearchBudget& = {});

}  // namespace labelkit
