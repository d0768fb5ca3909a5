#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "disposition/invariants.hpp"

namespace disposition::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInvalidParameters = 2, kCapExceeded = 3 };

inline constexpr unsigned kDefaultMaxRowLength = 4;

struct SubgroupSelector {
  enum class Kind { group, gamma, lambda, center } kind = Kind::group;
  unsigned index = 1;

  // "group", "gamma:i", "lambda:j" or "center:i"; throws DomainError otherwise.
  static SubgroupSelector parse(const std::string& text);
};

std::vector<ReportRow> witt_rows(unsigned n, unsigned d, bool verify);
ReportRow order_row(const GroupParams& params, const SubgroupSelector& selector);
ReportRow multiplier_row(const GroupParams& params, unsigned m);
ReportRow polynilpotent_row(const GroupParams& params, const ClassRow& row,
                            unsigned max_length = kDefaultMaxRowLength);
std::vector<ReportRow> bounds_rows(const GroupParams& params, unsigned m);

// One property checked by `verify`.
struct VerifyCheck {
  enum class Status { pass, fail, skipped } status = Status::pass;
  std::string name;
  std::string observed;
  std::string expected;
};

struct VerifyReport {
  GroupParams params;
  std::size_t cap = 0;
  std::vector<VerifyCheck> checks;

  bool any(VerifyCheck::Status status) const;
  // 1 on any failure, otherwise 3 if the cap forced a skip, otherwise 0.
  int exit_code() const;
};

// Throws LazardRangeError when p <= c.
VerifyReport run_verify(const GroupParams& params, std::size_t cap, std::uint64_t seed = 1);
void print_verify(const VerifyReport& report, Format format, std::ostream& out);

// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace disposition::cli
