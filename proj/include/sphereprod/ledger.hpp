#pragma once

#include <string>
#include <vector>

namespace sphereprod {

// One reconciled discrepancy between a formula as originally displayed and
// what exact or numerical computation supports.
struct LedgerEntry {
    std::string topic;
    std::string stated;
    std::string adopted;
    std::string evidence;  // what was computed, and how
    bool confirmed;        // the adopted reading passed its check
};

// Recomputes every entry; output is deterministic.
std::vector<LedgerEntry> discrepancy_ledger();

std::string render_ledger(const std::vector<LedgerEntry>& entries);

}  // namespace sphereprod
