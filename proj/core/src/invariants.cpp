#include "disposition/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "disposition/errors.hpp"
#include "disposition/numtheory.hpp"

namespace disposition {
namespace {

BigNat chi(unsigned n, unsigned d) { return witt(n, static_cast<std::uint64_t>(d)); }

BigNat big(unsigned long v) { return BigNat(v); }

void require_range(unsigned value, unsigned lo, unsigned hi, const char* what) {
  if (value < lo || value > hi) {
    std::ostringstream msg;
    msg << what << " = " << value << " out of range [" << lo << ", " << hi << "]";
    throw DomainError(msg.str());
  }
}

}  // namespace

GroupParams GroupParams::make(std::uint64_t p, unsigned d, unsigned c) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (d < 1) throw DomainError("rank d must be >= 1");
  if (c < 1) throw DomainError("class c must be >= 1");
  return GroupParams{p, d, c};
}

std::string to_string(const GroupParams& params) {
  std::ostringstream out;
  out << "(p=" << params.p << ", d=" << params.d << ", c=" << params.c << ")";
  return out.str();
}

std::string PrimePowerOrder::to_string() const {
  return std::to_string(prime) + "^" + to_decimal(exponent);
}

ClassRow::ClassRow(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("class row must have at least one entry");
  for (unsigned m : entries_) {
    if (m < 1) throw DomainError("class row entries must be >= 1");
  }
}

ClassRow ClassRow::parse(const std::string& text) {
  std::vector<unsigned> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 9) {
      throw DomainError("malformed class row '" + text + "'");
    }
    entries.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return ClassRow(std::move(entries));
}

std::string ClassRow::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

BigNat order_exponent(unsigned d, unsigned c) {
  BigNat total = 0;
  for (unsigned k = 1; k <= c; ++k) total += big(c - k + 1) * chi(k, d);
  return total;
}

BigNat group_order_exponent(const GroupParams& params) {
  return order_exponent(params.d, params.c);
}

BigNat gamma_order_exponent(const GroupParams& params, unsigned i) {
  require_range(i, 1, params.c + 1, "gamma index i");
  BigNat total = 0;
  for (unsigned k = i; k <= params.c; ++k) total += big(params.c - k + 1) * chi(k, params.d);
  return total;
}

BigNat lambda_order_exponent(const GroupParams& params, unsigned j) {
  require_range(j, 1, params.c + 1, "lambda index j");
  return order_exponent(params.d, params.c) - order_exponent(params.d, j - 1);
}

BigNat upper_central_exponent(const GroupParams& params, unsigned i) {
  require_range(i, 0, params.c, "upper central index i");
  return lambda_order_exponent(params, params.c - i + 1);
}

BigNat lambda_layer_exponent(unsigned n, unsigned k, unsigned d) {
  if (n < 1) throw DomainError("layer index n must be >= 1");
  require_range(k, 1, n, "layer index k");
  BigNat total = 0;
  for (unsigned j = k; j <= n; ++j) total += chi(j, d);
  return total;
}

BigNat multiplier_rank_layer_branch(const GroupParams& params, unsigned m) {
  if (m < 1) throw DomainError("multiplier index m must be >= 1");
  if (m > params.c) throw DomainError("layer-sum branch requires m <= c");
  BigNat total = 0;
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = m + 1; j <= params.c + i; ++j) total += chi(j, params.d);
  }
  return total;
}

BigNat multiplier_rank_upper_branch(const GroupParams& params, unsigned m) {
  if (m < params.c) throw DomainError("upper branch requires m >= c");
  BigNat total = 0;
  for (unsigned i = 1; i <= params.c; ++i) {
    total += big(params.c - i + 1) * chi(m + i, params.d);
  }
  return total;
}

BigNat multiplier_rank_upper_limit_c(const GroupParams& params, unsigned m) {
  if (m < 1 || m > params.c) throw DomainError("requires 1 <= m <= c");
  BigNat inner = 0;
  for (unsigned i = m; i <= params.c; ++i) inner += chi(i + 1, params.d);
  BigNat total = big(m) * inner;
  for (unsigned i = 1; i <= m; ++i) total += big(m - i + 1) * chi(params.c + i, params.d);
  return total;
}

BigNat nilpotent_multiplier_rank(const GroupParams& params, unsigned m) {
  if (m < 1) throw DomainError("multiplier index m must be >= 1");
  if (m <= params.c) return multiplier_rank_layer_branch(params, m);
  return multiplier_rank_upper_branch(params, m);
}

BigNat schur_multiplier_rank(const GroupParams& params) {
  BigNat total = 0;
  for (unsigned i = 1; i <= params.c; ++i) total += chi(i + 1, params.d);
  return total;
}

BigNat polynilpotent_multiplier_rank(const GroupParams& params, const ClassRow& row) {
  const unsigned m1 = row.first();
  if (m1 > params.c) {
    throw DomainError("polynilpotent multiplier needs m_1 <= c (got m_1 = " +
                      std::to_string(m1) + ", c = " + std::to_string(params.c) + ")");
  }
  // s = m_1 sum_{i=m_1}^{c-1} chi_{i+1}(d) + sum_{i=1}^{m_1} (m_1-i+1) chi_{c+i}(d)
  BigNat inner = 0;
  for (unsigned i = m1; i + 1 <= params.c; ++i) inner += chi(i + 1, params.d);
  BigNat s = big(m1) * inner;
  for (unsigned i = 1; i <= m1; ++i) s += big(m1 - i + 1) * chi(params.c + i, params.d);
  return nested_chi(row.tail(), s);
}

BigNat frattini_commutator_exponent(const GroupParams& params, unsigned i) {
  require_range(i, 1, params.c, "Frattini commutator index i");
  return gamma_order_exponent(params, i) - chi(i, params.d);
}

BigNat burns_ellis_bound_exponent(const GroupParams& params, unsigned m) {
  if (m < 1) throw DomainError("Burns-Ellis index m must be >= 1");
  BigNat total = chi(m + 1, params.d);
  const BigNat d = big(params.d);
  for (unsigned i = 1; i <= std::min(m, params.c); ++i) {
    BigNat power;
    mpz_pow_ui(power.get_mpz_t(), d.get_mpz_t(), m - i + 1);
    total += frattini_commutator_exponent(params, i) * power;
  }
  return total;
}

BigNat njp_bound_exponent(const BigNat& n, const BigNat& k, unsigned m) {
  if (k < 1) throw DomainError("NJP bound needs |G'| exponent k >= 1");
  if (n <= k) throw DomainError("NJP bound needs n > k");
  if (m < 2) throw DomainError("NJP bound needs m >= 2");
  const BigNat gap = n - k;
  BigNat power;
  mpz_pow_ui(power.get_mpz_t(), gap.get_mpz_t(), m);
  return witt(m + 1, gap) + witt(m + 2, 2) + (k - 1) * power;
}

BigNat jones_generator_bound(const GroupParams& params) {
  BigNat total = 0;
  for (unsigned i = 1; i <= params.c; ++i) total += chi(i + 1, params.d);
  return total;
}

bool capability_check(const GroupParams& params, unsigned n) {
  if (n < 1) throw DomainError("capability index n must be >= 1");
  const GroupParams cover{params.p, params.d, params.c + n};
  const BigNat quotient = group_order_exponent(cover) - upper_central_exponent(cover, n);
  return quotient == group_order_exponent(params);
}

}  // namespace disposition
