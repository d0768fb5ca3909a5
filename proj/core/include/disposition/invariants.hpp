#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "disposition/bignat.hpp"

namespace disposition {

/// The triple (p, d, c) naming the disposition group G_d^c = F/lambda_{c+1}(F).
struct GroupParams {
  std::uint64_t p = 2;
  unsigned d = 1;
  unsigned c = 1;

  /// Validates p prime (trial division), d >= 1, c >= 1.
  static GroupParams make(std::uint64_t p, unsigned d, unsigned c);

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

std::string to_string(const GroupParams& params);

/// An order p^exponent; never expanded to a full integer.
struct PrimePowerOrder {
  std::uint64_t prime = 2;
  BigNat exponent = 0;

  bool is_trivial() const { return exponent == 0; }
  std::string to_string() const;

  friend bool operator==(const PrimePowerOrder& a, const PrimePowerOrder& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Class row (m_1, ..., m_t) of a polynilpotent variety; t >= 1, every m_i >= 1.
class ClassRow {
 public:
  explicit ClassRow(std::vector<unsigned> entries);

  /// Parses "1,2,3".
  static ClassRow parse(const std::string& text);

  unsigned first() const { return entries_.front(); }
  std::span<const unsigned> tail() const { return std::span(entries_).subspan(1); }
  std::span<const unsigned> entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  std::string to_string() const;

  friend bool operator==(const ClassRow&, const ClassRow&) = default;

 private:
  std::vector<unsigned> entries_;
};

/// E(c, d) = sum_{k=1}^{c} (c-k+1) chi_k(d), with E(0, d) = 0.
BigNat order_exponent(unsigned d, unsigned c);

/// |G_d^c| = p^{E(c,d)}.
BigNat group_order_exponent(const GroupParams& params);

/// |gamma_i(G_d^c)| exponent, 1 <= i <= c+1.
BigNat gamma_order_exponent(const GroupParams& params, unsigned i);

/// |lambda_j(G_d^c)| exponent = E(c,d) - E(j-1,d), 1 <= j <= c+1.
BigNat lambda_order_exponent(const GroupParams& params, unsigned j);

/// |Z_i(G_d^c)| exponent, 0 <= i <= c, via Z_i = lambda_{c-i+1}.
BigNat upper_central_exponent(const GroupParams& params, unsigned i);

/// s_k = chi_k(d) + ... + chi_n(d): order exponent of the layer
/// (lambda_n(F) cap gamma_k(F)) / (lambda_{n+1}(F) cap gamma_k(F)).
BigNat lambda_layer_exponent(unsigned n, unsigned k, unsigned d);

/// Rank of the elementary abelian m-nilpotent multiplier N_m M(G_d^c).
/// Uses the layer-sum branch for m <= c and the upper branch for m > c.
BigNat nilpotent_multiplier_rank(const GroupParams& params, unsigned m);

/// m <= c branch: sum_{i=1}^{m} t_i, t_i = chi_{m+1}(d) + ... + chi_{c+i}(d).
BigNat multiplier_rank_layer_branch(const GroupParams& params, unsigned m);

/// m >= c branch: sum_{i=1}^{c} (c-i+1) chi_{m+i}(d).
BigNat multiplier_rank_upper_branch(const GroupParams& params, unsigned m);

/// The m <= c closed form with the outer sum running to c instead of c-1.
/// Only used to report the discrepancy; it fails the m = 1 and m = c checks.
BigNat multiplier_rank_upper_limit_c(const GroupParams& params, unsigned m);

/// Schur multiplier rank sum_{i=1}^{c} chi_{i+1}(d).
BigNat schur_multiplier_rank(const GroupParams& params);

/// Rank g_s of N_{m_1,...,m_t} M(G_d^c); requires m_1 <= c.
BigNat polynilpotent_multiplier_rank(const GroupParams& params, const ClassRow& row);

/// k_i with |[Phi(G), _{i-1} G]| = p^{k_i}, 1 <= i <= c.
BigNat frattini_commutator_exponent(const GroupParams& params, unsigned i);

/// chi_{m+1}(d) + sum_{i=1}^{min(m,c)} k_i d^{m-i+1}; k_i = 0 beyond the class.
BigNat burns_ellis_bound_exponent(const GroupParams& params, unsigned m);

/// chi_{m+1}(n-k) + chi_{m+2}(2) + (k-1)(n-k)^m, for n > k >= 1 and m >= 2.
BigNat njp_bound_exponent(const BigNat& n, const BigNat& k, unsigned m);

/// Generator bound sum_{i=1}^{c} chi_{i+1}(d) for the Schur multiplier.
BigNat jones_generator_bound(const GroupParams& params);

/// Order-level shadow of G_d^{n+c} / Z_n(G_d^{n+c}) = G_d^c (necessary, not sufficient).
bool capability_check(const GroupParams& params, unsigned n);

}  // namespace disposition
