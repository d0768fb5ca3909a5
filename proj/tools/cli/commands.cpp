#include "cli/commands.hpp"

#include <CLI11.hpp>

#include "cli/ledger.hpp"
#include "disposition/errors.hpp"
#include "disposition/numtheory.hpp"
#include "disposition/subgroup.hpp"

namespace disposition::cli {

namespace {

std::string dec(const BigNat& value) { return value.get_str(); }

ReportRow base_row(const std::string& quantity, const GroupParams& params) {
  ReportRow row;
  row.quantity = quantity;
  row.p = params.p;
  row.d = params.d;
  row.c = params.c;
  return row;
}

bool is_printed_example(const GroupParams& params, unsigned m) {
  return params.d == 2 && params.c == 4 && m == 2;
}

std::optional<std::string> multiplier_note(const GroupParams& params, unsigned m, const BigNat& rank) {
  if (m > params.c) return std::nullopt;
  const BigNat literal = multiplier_rank_upper_limit_c(params, m);
  if (is_printed_example(params, m)) {
    return ledger_note("L2", "p^" + dec(rank) + " (p^" + dec(literal) + " if the first sum runs to c as printed)");
  }
  if (literal != rank) {
    return ledger_note("L3", "p^" + dec(rank) + " with limit c-1, p^" + dec(literal) + " with limit c");
  }
  return std::nullopt;
}

}  // namespace

SubgroupSelector SubgroupSelector::parse(const std::string& text) {
  if (text == "group") return {};
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("bad subgroup selector '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string digits = text.substr(colon + 1);
  if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError("bad subgroup index in '" + text + "'");
  }
  SubgroupSelector out;
  out.index = static_cast<unsigned>(std::stoul(digits));
  if (kind == "gamma") {
    out.kind = Kind::gamma;
  } else if (kind == "lambda") {
    out.kind = Kind::lambda;
  } else if (kind == "center") {
    out.kind = Kind::center;
  } else {
    throw DomainError("bad subgroup selector '" + text + "' (expected group, gamma:i, lambda:j or center:i)");
  }
  return out;
}

std::vector<ReportRow> witt_rows(unsigned n, unsigned d, bool verify) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (verify && d < 1) throw DomainError("--verify needs d >= 1");
  ReportRow row;
  row.quantity = "witt";
  row.d = d;
  row.m = n;
  row.exponent = dec(witt(n, static_cast<std::uint64_t>(d)));
  std::vector<ReportRow> rows{row};
  if (verify) {
    row.quantity = "lyndon_count";
    row.exponent = dec(lyndon_count(n, d));
    rows.push_back(row);
  }
  return rows;
}

ReportRow order_row(const GroupParams& params, const SubgroupSelector& selector) {
  const std::string index = std::to_string(selector.index);
  switch (selector.kind) {
    case SubgroupSelector::Kind::group: {
      auto row = base_row("order(G)", params);
      row.exponent = dec(group_order_exponent(params));
      return row;
    }
    case SubgroupSelector::Kind::gamma: {
      auto row = base_row("order(gamma_" + index + ")", params);
      row.exponent = dec(gamma_order_exponent(params, selector.index));
      return row;
    }
    case SubgroupSelector::Kind::lambda: {
      auto row = base_row("order(lambda_" + index + ")", params);
      row.exponent = dec(lambda_order_exponent(params, selector.index));
      return row;
    }
    case SubgroupSelector::Kind::center: {
      auto row = base_row("order(Z_" + index + ")", params);
      row.exponent = dec(upper_central_exponent(params, selector.index));
      return row;
    }
  }
  throw std::logic_error("unreachable selector kind");
}

ReportRow multiplier_row(const GroupParams& params, unsigned m) {
  auto row = base_row("multiplier_rank", params);
  row.m = m;
  const BigNat rank = nilpotent_multiplier_rank(params, m);
  row.exponent = dec(rank);
  row.note = multiplier_note(params, m, rank);
  return row;
}

ReportRow polynilpotent_row(const GroupParams& params, const ClassRow& class_row, unsigned max_length) {
  if (class_row.length() > max_length) {
    throw DomainError("class row has " + std::to_string(class_row.length()) + " entries; the limit is " +
                      std::to_string(max_length) + " (raise it with --max-row)");
  }
  if (class_row.first() > params.c) {
    throw DomainError("class row needs m_1 <= c (the polynilpotent multiplier theorem assumes m_1 <= c; got m_1 = " +
                      std::to_string(class_row.first()) + ", c = " + std::to_string(params.c) + ")");
  }
  auto row = base_row("polynilpotent_multiplier_rank", params);
  row.row = std::vector<unsigned>(class_row.entries().begin(), class_row.entries().end());
  row.exponent = dec(polynilpotent_multiplier_rank(params, class_row));
  return row;
}

std::vector<ReportRow> bounds_rows(const GroupParams& params, unsigned m) {
  if (m < 1) throw DomainError("multiplier index m must be >= 1");
  std::vector<ReportRow> rows;
  const auto with_m = [&](const std::string& quantity, const BigNat& value) {
    auto row = base_row(quantity, params);
    row.m = m;
    row.exponent = dec(value);
    return row;
  };

  const ReportRow actual = multiplier_row(params, m);
  rows.push_back(actual);
  const BigNat rank(actual.exponent);
  const BigNat gamma = m + 1 <= params.c + 1 ? gamma_order_exponent(params, m + 1) : BigNat(0);
  rows.push_back(with_m("order(gamma_" + std::to_string(m + 1) + ")", gamma));
  rows.push_back(with_m("combined_lhs", rank + gamma));
  rows.push_back(with_m("burns_ellis_bound", burns_ellis_bound_exponent(params, m)));
  if (m == 1) rows.push_back(with_m("jones_bound", jones_generator_bound(params)));

  if (m >= 2) {
    const BigNat n = group_order_exponent(params);
    const BigNat k = gamma_order_exponent(params, 2);
    if (k >= 1 && n > k) {
      auto row = with_m("njp_bound", njp_bound_exponent(n, k, m));
      if (is_printed_example(params, m)) row.note = ledger_note("L1", "p^" + row.exponent + " (n=18, k=10, m=2)");
      rows.push_back(row);
    }
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of disposition p-groups G_d^c", "disposition"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "json", "csv"};
  std::string format_text = "table";

  unsigned n = 0;
  unsigned d = 0;
  unsigned c = 0;
  std::uint64_t p = 0;
  bool verify_flag = false;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--p", p, "prime")->required();
    sub->add_option("--d", d, "number of generators")->required();
    sub->add_option("--c", c, "class")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "table, json or csv")->check(CLI::IsMember(formats));
  };

  auto* witt_cmd = app.add_subcommand("witt", "Witt number chi_n(d)");
  witt_cmd->add_option("--n", n, "word length")->required();
  witt_cmd->add_option("--d", d, "alphabet size")->required();
  witt_cmd->add_flag("--verify", verify_flag, "cross-check against a Lyndon word count");
  add_format(witt_cmd);

  std::string selector_text = "group";
  auto* order_cmd = app.add_subcommand("order", "order exponent of G or a term of its central series");
  add_group(order_cmd);
  order_cmd->add_option("--subgroup", selector_text, "group | gamma:i | lambda:j | center:i");
  add_format(order_cmd);

  unsigned m = 0;
  std::string row_text;
  unsigned max_row = kDefaultMaxRowLength;
  auto* multiplier_cmd = app.add_subcommand("multiplier", "rank of the m-nilpotent or polynilpotent multiplier");
  add_group(multiplier_cmd);
  auto* m_opt = multiplier_cmd->add_option("--m", m, "nilpotent class m");
  auto* row_opt = multiplier_cmd->add_option("--row", row_text, "class row m_1,...,m_t");
  m_opt->excludes(row_opt);
  multiplier_cmd->add_option("--max-row", max_row, "largest accepted class row length");
  add_format(multiplier_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "multiplier rank against the published bounds");
  add_group(bounds_cmd);
  bounds_cmd->add_option("--m", m, "nilpotent class m")->required();
  add_format(bounds_cmd);

  std::size_t cap = kDefaultClosureCap;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "check the formulas against the concrete group");
  add_group(verify_cmd);
  verify_cmd->add_option("--cap", cap, "largest subgroup to enumerate");
  verify_cmd->add_option("--seed", seed, "seed for the randomized checks");
  add_format(verify_cmd);

  auto* ledger_cmd = app.add_subcommand("ledger", "print the discrepancy ledger");
  add_format(ledger_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  }

  try {
    const Format format = parse_format(format_text);
    if (*witt_cmd) {
      const auto rows = witt_rows(n, d, verify_flag);
      print_rows(rows, format, out);
      if (verify_flag) {
        const bool ok = rows[0].exponent == rows[1].exponent;
        if (format == Format::table) out << (ok ? "verified" : "MISMATCH") << "\n";
        return ok ? kSuccess : kVerificationFailed;
      }
      return kSuccess;
    }
    if (*order_cmd) {
      const auto params = GroupParams::make(p, d, c);
      print_rows({order_row(params, SubgroupSelector::parse(selector_text))}, format, out);
      return kSuccess;
    }
    if (*multiplier_cmd) {
      const auto params = GroupParams::make(p, d, c);
      if (m_opt->count() == 0 && row_opt->count() == 0) throw DomainError("multiplier needs --m or --row");
      const ReportRow row = m_opt->count() ? multiplier_row(params, m)
                                           : polynilpotent_row(params, ClassRow::parse(row_text), max_row);
      print_rows({row}, format, out);
      return kSuccess;
    }
    if (*bounds_cmd) {
      print_rows(bounds_rows(GroupParams::make(p, d, c), m), format, out);
      return kSuccess;
    }
    if (*verify_cmd) {
      if (cap == 0) throw DomainError("cap must be >= 1");
      const auto report = run_verify(GroupParams::make(p, d, c), cap, seed);
      print_verify(report, format, out);
      return report.exit_code();
    }
    if (*ledger_cmd) {
      if (format == Format::table) {
        out << render_ledger();
      } else if (format == Format::json) {
        auto array = nlohmann::ordered_json::array();
        for (const auto& e : discrepancy_ledger()) {
          array.push_back({{"id", e.id}, {"version", kLedgerVersion}, {"location", e.location},
                           {"quoted", e.quoted}, {"computed", e.computed}, {"remark", e.remark}});
        }
        out << array.dump(2) << "\n";
      } else {
        out << "id,version,quoted,computed\n";
        for (const auto& e : discrepancy_ledger()) {
          out << e.id << ',' << kLedgerVersion << ",\"" << e.quoted << "\",\"" << e.computed << "\"\n";
        }
      }
      return kSuccess;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  }
  err << "error: no command\n";
  return kInvalidParameters;
}

}  // namespace disposition::cli
