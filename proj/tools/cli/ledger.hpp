#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace disposition::cli {

inline constexpr int kLedgerVersion = 1;

// A published value that the formulas, as implemented, do not reproduce.
struct LedgerEntry {
  std::string id;
  std::string location;
  std::string quoted;
  std::string computed;
  std::string remark;
};

const std::vector<LedgerEntry>& discrepancy_ledger();

// Throws std::out_of_range for an unknown id.
const LedgerEntry& ledger_entry(std::string_view id);

// "<id>: ledger v<version>, <location>; quoted <quoted>, computed <computed>"
std::string ledger_note(std::string_view id);
std::string ledger_note(std::string_view id, const std::string& computed);

std::string render_ledger();

}  // namespace disposition::cli
