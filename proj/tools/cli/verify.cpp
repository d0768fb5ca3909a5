#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "disposition/class2.hpp"
#include "disposition/errors.hpp"
#include "disposition/group.hpp"
#include "disposition/subgroup.hpp"

namespace disposition::cli {

namespace {

using Status = VerifyCheck::Status;

BigNat prime_power(std::uint64_t p, const BigNat& e) {
  BigNat out;
  mpz_pow_ui(out.get_mpz_t(), BigNat(static_cast<unsigned long>(p)).get_mpz_t(), e.get_ui());
  return out;
}

std::string power_text(std::uint64_t p, const BigNat& e) {
  return std::to_string(p) + "^" + e.get_str() + " = " + prime_power(p, e).get_str();
}

bool fits(std::uint64_t p, const BigNat& e, std::size_t cap) {
  return prime_power(p, e) <= BigNat(static_cast<unsigned long>(cap));
}

class Checks {
 public:
  explicit Checks(VerifyReport& report) : report_(report) {}

  void add(const std::string& name, bool ok, std::string observed, std::string expected) {
    report_.checks.push_back({ok ? Status::pass : Status::fail, name, std::move(observed), std::move(expected)});
  }
  void skip(const std::string& name, std::string why, std::string expected) {
    report_.checks.push_back({Status::skipped, name, std::move(why), std::move(expected)});
  }
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const CapExceeded& e) {
      skip(name, "cap exceeded after " + std::to_string(e.partial_size()) + " elements", "");
    } catch (const std::logic_error& e) {
      add(name, false, std::string("internal check failed: ") + e.what(), "");
    }
  }

 private:
  VerifyReport& report_;
};

void check_series(Checks& checks, const std::vector<SeriesTerm>& series, const std::string& label,
                  const GroupParams& params, std::size_t cap,
                  BigNat (*formula)(const GroupParams&, unsigned)) {
  for (const auto& term : series) {
    const BigNat e = formula(params, term.index);
    const std::string name = "order(" + label + "_" + std::to_string(term.index) + ")";
    if (term.subgroup) {
      checks.add(name, BigNat(static_cast<unsigned long>(term.subgroup->size())) == prime_power(params.p, e),
                 std::to_string(term.subgroup->size()), power_text(params.p, e));
    } else if (!fits(params.p, e, cap)) {
      checks.skip(name, "above cap (" + std::to_string(term.partial_size) + " elements reached)",
                  power_text(params.p, e));
    } else {
      checks.add(name, false, "not enumerated within cap", power_text(params.p, e));
    }
  }
}

Coords random_coords(const DispositionGroup& group, std::mt19937_64& rng) {
  Coords out(group.dimension());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::uniform_int_distribution<std::uint64_t>(0, group.modulus(k) - 1)(rng);
  }
  return out;
}

LiePolynomial random_lie(const std::shared_ptr<const FreeLieAlgebra>& algebra, std::mt19937_64& rng) {
  LiePolynomial out(algebra);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (HallIndex k = 0; k < algebra->dimension(); ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    out.add_term(k, q);
  }
  return out;
}

}  // namespace

bool VerifyReport::any(VerifyCheck::Status status) const {
  for (const auto& check : checks) {
    if (check.status == status) return true;
  }
  return false;
}

int VerifyReport::exit_code() const {
  if (any(Status::fail)) return kVerificationFailed;
  if (any(Status::skipped)) return kCapExceeded;
  return kSuccess;
}

VerifyReport run_verify(const GroupParams& params, std::size_t cap, std::uint64_t seed) {
  const auto group = DispositionGroup::get(params);
  VerifyReport report{params, cap, {}};
  Checks checks(report);
  const std::uint64_t p = params.p;
  std::mt19937_64 rng(seed);

  std::optional<SubgroupSet> whole;
  const BigNat group_e = group_order_exponent(params);
  if (fits(p, group_e, cap)) {
    checks.guarded("order(G)", [&] {
      whole = whole_group(group, cap);
      checks.add("order(G)", BigNat(static_cast<unsigned long>(whole->size())) == prime_power(p, group_e),
                 std::to_string(whole->size()), power_text(p, group_e));
    });
  } else {
    checks.skip("order(G)", "above cap", power_text(p, group_e));
  }

  const SeriesOptions options{cap, false};
  std::vector<SeriesTerm> gamma;
  std::vector<SeriesTerm> lambda;
  checks.guarded("lower central series", [&] {
    gamma = lower_central_series(group, options);
    check_series(checks, gamma, "gamma", params, cap, gamma_order_exponent);
  });
  checks.guarded("lambda series", [&] {
    lambda = lambda_series(group, options);
    check_series(checks, lambda, "lambda", params, cap, lambda_order_exponent);
  });

  if (gamma.size() == params.c + 1) {
    bool top_nontrivial = false;
    for (const auto& g : gamma[params.c - 1].generators) top_nontrivial = top_nontrivial || !g.is_identity();
    const bool bottom_trivial = gamma[params.c].subgroup && gamma[params.c].subgroup->size() == 1;
    checks.add("nilpotency class", top_nontrivial && bottom_trivial,
               top_nontrivial && bottom_trivial ? std::to_string(params.c) : "differs", std::to_string(params.c));
  }

  for (std::size_t j = 0; j + 1 < lambda.size(); ++j) {
    const std::string name = "lambda_" + std::to_string(j + 1) + "/lambda_" + std::to_string(j + 2) +
                             " central elementary abelian";
    if (!lambda[j].subgroup || !lambda[j + 1].subgroup) {
      checks.skip(name, "a term is above cap", "");
      continue;
    }
    const auto& upper = *lambda[j].subgroup;
    const auto& lower = *lambda[j + 1].subgroup;
    bool ok = lower.is_subset_of(upper);
    for (const Coords& x : upper.coords()) {
      if (!ok) break;
      ok = lower.contains(group->power(x, static_cast<std::int64_t>(p)));
      for (const auto& g : group->generators()) ok = ok && lower.contains(group->commutator(x, g.coords()));
    }
    checks.add(name, ok, ok ? "yes" : "no", "yes");
  }

  if (!lambda.empty() && lambda[params.c - 1].subgroup) {
    const bool ok = is_central(*lambda[params.c - 1].subgroup);
    checks.add("lambda_" + std::to_string(params.c) + " central", ok, ok ? "yes" : "no", "yes");
  }

  const BigNat center_e = upper_central_exponent(params, 1);
  if (whole) {
    checks.guarded("order(Z_1)", [&] {
      const auto z = center(group, cap);
      checks.add("order(Z_1)", BigNat(static_cast<unsigned long>(z.size())) == prime_power(p, center_e),
                 std::to_string(z.size()), power_text(p, center_e));
      if (lambda.size() == params.c + 1 && lambda[params.c - 1].subgroup) {
        const bool same = z == *lambda[params.c - 1].subgroup;
        checks.add("Z_1 = lambda_" + std::to_string(params.c), same, same ? "equal" : "different", "equal");
      }
    });
    unsigned long max_e = 0;
    for (const auto& g : whole->elements()) {
      max_e = std::max(max_e, element_order(g).exponent.get_ui());
    }
    checks.add("exponent", max_e == params.c, std::to_string(p) + "^" + std::to_string(max_e),
               std::to_string(p) + "^" + std::to_string(params.c));
  } else {
    checks.skip("order(Z_1)", "needs the whole group", power_text(p, center_e));
    const auto e = element_order(group->generator(0)).exponent;
    checks.add("order(x_1)", e == params.c, std::to_string(p) + "^" + e.get_str(),
               std::to_string(p) + "^" + std::to_string(params.c));
  }

  {
    int nonzero = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_lie(group->algebra_ptr(), rng);
      const auto v = random_lie(group->algebra_ptr(), rng);
      if (bch_log_product_checked(u, v).residual_terms != 0) ++nonzero;
    }
    checks.add("BCH Dynkin residual (20 pairs)", nonzero == 0, std::to_string(nonzero) + " nonzero", "0 nonzero");
  }
  {
    int bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const GroupElement g = group->element(random_coords(*group, rng));
      const GroupElement h = group->element(random_coords(*group, rng));
      if (multiply(g, h) != multiply_reference(g, h)) ++bad;
    }
    checks.add("template vs exact product (20 pairs)", bad == 0, std::to_string(bad) + " differ", "0 differ");
  }
  {
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Coords a = random_coords(*group, rng);
      const Coords b = random_coords(*group, rng);
      const Coords c = random_coords(*group, rng);
      if (group->multiply(group->multiply(a, b), c) != group->multiply(a, group->multiply(b, c))) ++bad;
    }
    checks.add("associativity (200 triples)", bad == 0, std::to_string(bad) + " fail", "0 fail");
  }
  if (params.c == 2) {
    const auto collected = Class2Group::make(params);
    int bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Coords g = random_coords(*group, rng);
      const Coords h = random_coords(*group, rng);
      const Coords product = collected->multiply(collected->from_lazard(g), collected->from_lazard(h));
      if (collected->to_lazard(product) != group->multiply(g, h)) ++bad;
    }
    checks.add("collected class-2 product (200 pairs)", bad == 0, std::to_string(bad) + " differ", "0 differ");
  }
  return report;
}

void print_verify(const VerifyReport& report, Format format, std::ostream& out) {
  const auto status_text = [](Status s) {
    return s == Status::pass ? "pass" : s == Status::fail ? "FAIL" : "skipped";
  };
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["p"] = report.params.p;
    doc["d"] = report.params.d;
    doc["c"] = report.params.c;
    doc["cap"] = report.cap;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
      doc["checks"].push_back({{"check", check.name}, {"status", status_text(check.status)},
                               {"observed", check.observed}, {"expected", check.expected}});
    }
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == Format::csv) {
    const auto field = [](const std::string& s) { return "\"" + s + "\""; };
    out << "check,status,observed,expected\n";
    for (const auto& check : report.checks) {
      out << field(check.name) << ',' << status_text(check.status) << ',' << field(check.observed) << ','
          << field(check.expected) << "\n";
    }
    return;
  }
  out << "verify " << to_string(report.params) << " cap=" << report.cap << "\n";
  std::size_t width = 5;
  for (const auto& check : report.checks) width = std::max(width, check.name.size());
  for (const auto& check : report.checks) {
    std::string line = "  " + std::string(status_text(check.status));
    line.resize(11, ' ');
    line += check.name;
    line.resize(11 + width + 2, ' ');
    line += check.observed;
    if (!check.expected.empty()) line += "  (expected " + check.expected + ")";
    out << line << "\n";
  }
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& check : report.checks) {
    (check.status == Status::pass ? pass : check.status == Status::fail ? fail : skipped) += 1;
  }
  out << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
}

}  // namespace disposition::cli
