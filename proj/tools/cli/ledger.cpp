#include "cli/ledger.hpp"

#include <sstream>
#include <stdexcept>

namespace disposition::cli {

const std::vector<LedgerEntry>& discrepancy_ledger() {
  static const std::vector<LedgerEntry> entries{
      {"L1",
       "example after the bound |N_m M(G)| <= p^(chi_{m+1}(n-k)+chi_{m+2}(2)+(k-1)(n-k)^m) for |G|=p^n, |G'|=p^k, "
       "applied to G_2^4 with m=2",
       "p^4608", "p^747 (n=18, k=10, m=2)",
       "4608 = 9*8^3, which suggests a different exponent on (n-k) than the printed formula"},
      {"L2", "same example, value given for |N_2 M(G_2^4)|", "p^12",
       "p^31 (p^43 if the first sum runs to c as printed)",
       "12 is the m=1 value sum_{i=1}^{4} chi_{i+1}(2), i.e. the Schur multiplier rank"},
      {"L3",
       "m-nilpotent multiplier theorem, case m <= c: first sum printed as m*sum_{i=m}^{c} chi_{i+1}(d)",
       "upper limit c", "upper limit c-1, as derived in the proof and in the polynilpotent theorem",
       "the printed limit adds m*chi_{c+1}(d) and breaks agreement with the m >= c case at m = c"},
  };
  return entries;
}

const LedgerEntry& ledger_entry(std::string_view id) {
  for (const auto& entry : discrepancy_ledger()) {
    if (entry.id == id) return entry;
  }
  throw std::out_of_range("no ledger entry '" + std::string(id) + "'");
}

std::string ledger_note(std::string_view id) {
  return ledger_note(id, ledger_entry(id).computed);
}

std::string ledger_note(std::string_view id, const std::string& computed) {
  const auto& entry = ledger_entry(id);
  std::ostringstream out;
  out << entry.id << ": ledger v" << kLedgerVersion << ", " << entry.location << "; quoted " << entry.quoted
      << ", computed " << computed;
  return out.str();
}

std::string render_ledger() {
  std::ostringstream out;
  out << "discrepancy ledger v" << kLedgerVersion << "\n";
  for (const auto& entry : discrepancy_ledger()) {
    out << "\n" << entry.id << "\n"
        << "  location: " << entry.location << "\n"
        << "  quoted:   " << entry.quoted << "\n"
        << "  computed: " << entry.computed << "\n"
        << "  remark:   " << entry.remark << "\n";
  }
  return out.str();
}

}  // namespace disposition::cli
