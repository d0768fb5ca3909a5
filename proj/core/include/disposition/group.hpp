#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "disposition/bch.hpp"
#include "disposition/free_lie.hpp"
#include "disposition/invariants.hpp"
#include "disposition/lie_polynomial.hpp"

namespace disposition {

/// Coordinates over the Hall basis; entry k lives in Z / p^{c+1-weight(k)}.
using Coords = std::vector<std::uint64_t>;

struct CoordsHash {
  std::size_t operator()(const Coords& coords) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t x : coords) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

class GroupElement;

/// Concrete G_d^c for p > c, realized on the free nilpotent Lie ring modulo the
/// lattice sum_w p^{c+1-w} L_w, with the group law given by truncated BCH.
///
/// Per-context data (structure constants mod p^c and the BCH template with its
/// coefficients reduced mod p^c) is built once and shared read-only.
class DispositionGroup : public std::enable_shared_from_this<DispositionGroup> {
 public:
  /// Cached context; throws LazardRangeError when p <= c.
  static std::shared_ptr<const DispositionGroup> get(const GroupParams& params);

  explicit DispositionGroup(const GroupParams& params);

  const GroupParams& params() const { return params_; }
  const FreeLieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const FreeLieAlgebra>& algebra_ptr() const { return algebra_; }
  std::size_t dimension() const { return moduli_.size(); }

  /// p^{c+1-w} for the coordinate of a weight-w basis element.
  std::uint64_t modulus(HallIndex k) const { return moduli_[k]; }
  /// p^c: every coordinate computation happens in this ring before reduction.
  std::uint64_t ring_modulus() const { return ring_modulus_; }

  /// log_p of the number of coordinate vectors: sum_w (c+1-w) chi_w(d).
  unsigned long order_exponent() const;

  GroupElement identity() const;
  GroupElement generator(unsigned letter) const;
  std::vector<GroupElement> generators() const;
  /// Validates 0 <= coords[k] < modulus(k).
  GroupElement element(Coords coords) const;

  // Raw coordinate arithmetic. Inputs may be any nonnegative lifts; outputs are canonical.
  Coords multiply(const Coords& a, const Coords& b) const;
  Coords inverse(const Coords& a) const;
  Coords power(const Coords& a, std::int64_t n) const;
  Coords commutator(const Coords& a, const Coords& b) const;
  Coords conjugate(const Coords& a, const Coords& by) const;  // by^{-1} a by
  bool is_identity(const Coords& a) const;

  /// Reduces a rational coefficient of a weight-w coordinate modulo p^{c+1-w}.
  std::uint64_t reduce_rational(const Rational& q, unsigned weight) const;

 private:
  Coords bracket(const Coords& a, const Coords& b) const;
  Coords canonical(Coords a) const;

  GroupParams params_;
  std::shared_ptr<const FreeLieAlgebra> algebra_;
  std::shared_ptr<const BchTemplate> template_;
  std::vector<std::uint64_t> moduli_;
  std::vector<unsigned> weights_;
  std::uint64_t ring_modulus_ = 1;
  // structure constants mod p^c, flattened per ordered pair (a, b)
  std::vector<std::vector<std::pair<HallIndex, std::uint64_t>>> structure_;
  // template coefficients mod p^c, indexed by rank-2 Hall index
  std::vector<std::uint64_t> template_coeffs_;
};

/// An element of G_d^c in Lazard (log) coordinates.
class GroupElement {
 public:
  GroupElement(std::shared_ptr<const DispositionGroup> group, Coords coords)
      : group_(std::move(group)), coords_(std::move(coords)) {}

  const DispositionGroup& group() const { return *group_; }
  const std::shared_ptr<const DispositionGroup>& group_ptr() const { return group_; }
  const Coords& coords() const { return coords_; }
  std::uint64_t coordinate(HallIndex k) const { return coords_[k]; }
  bool is_identity() const { return group_->is_identity(coords_); }

  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_ == b.group_ && a.coords_ == b.coords_;
  }

 private:
  std::shared_ptr<const DispositionGroup> group_;
  Coords coords_;
};

/// Canonical integer lift: coordinates in [0, p^{c+1-w}).
LiePolynomial lift(const GroupElement& g);

/// Maps a rational Lie polynomial to G_d^c; throws LazardRangeError when p <= c.
GroupElement reduce(const LiePolynomial& u, const GroupParams& params);
GroupElement reduce(const LiePolynomial& u, const std::shared_ptr<const DispositionGroup>& group);

/// Group law via the precomputed BCH template in modular arithmetic.
GroupElement multiply(const GroupElement& g, const GroupElement& h);
/// Group law via exact rational BCH on canonical lifts, then reduction.
GroupElement multiply_reference(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, std::int64_t n);
/// [g, h] = g^{-1} h^{-1} g h.
GroupElement commutator(const GroupElement& g, const GroupElement& h);
/// Least p^e with g^{p^e} = 1.
PrimePowerOrder element_order(const GroupElement& g);

}  // namespace disposition
