#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "disposition/free_lie.hpp"
#include "disposition/group.hpp"
#include "disposition/invariants.hpp"

namespace disposition {

/// Collected-form model of G_d^2, valid for every prime including p = 2.
///
/// An element is x_1^{a_1} ... x_d^{a_d} prod_{i<j} [x_i,x_j]^{b_ij} with
/// a_i mod p^2 and b_ij mod p. Coordinates share the Hall basis order of the
/// rank-d class-2 free Lie algebra: weight-1 slots hold a_i, weight-2 slots b_ij.
class Class2Group : public std::enable_shared_from_this<Class2Group> {
 public:
  /// Throws DomainError unless c == 2.
  static std::shared_ptr<const Class2Group> make(const GroupParams& params);

  explicit Class2Group(const GroupParams& params);

  const GroupParams& params() const { return params_; }
  const FreeLieAlgebra& algebra() const { return *algebra_; }
  std::size_t dimension() const { return algebra_->dimension(); }
  std::uint64_t modulus(HallIndex k) const { return algebra_->element(k).weight == 1 ? p2_ : p_; }

  Coords multiply(const Coords& g, const Coords& h) const;
  Coords identity() const { return Coords(dimension(), 0); }
  Coords generator(unsigned letter) const;

  /// Collected form -> Lazard coordinates of the same element (needs p > 2).
  Coords to_lazard(const Coords& collected) const;
  /// Lazard coordinates -> collected form (needs p > 2).
  Coords from_lazard(const Coords& lazard) const;

 private:
  GroupParams params_;
  std::shared_ptr<const FreeLieAlgebra> algebra_;
  std::uint64_t p_;
  std::uint64_t p2_;
  // commutator_slot_[i * d + j] = Hall index of [x_i, x_j] for i < j
  std::vector<HallIndex> commutator_slot_;
};

/// Product in collected form using only [x_j^a, x_i^b] = [x_i, x_j]^{-ab} (class 2).
Coords class2_multiply(const Class2Group& group, const Coords& g, const Coords& h);

}  // namespace disposition
