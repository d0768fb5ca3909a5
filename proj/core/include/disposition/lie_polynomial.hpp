#pragma once

#include <map>
#include <memory>
#include <string>

#include "disposition/bignat.hpp"
#include "disposition/free_lie.hpp"

namespace disposition {

/// Element of the free nilpotent Lie algebra over Q: Hall index -> nonzero rational.
class LiePolynomial {
 public:
  explicit LiePolynomial(std::shared_ptr<const FreeLieAlgebra> algebra);

  static LiePolynomial basis_element(std::shared_ptr<const FreeLieAlgebra> algebra,
                                     HallIndex index, const Rational& coefficient = 1);
  static LiePolynomial generator(std::shared_ptr<const FreeLieAlgebra> algebra,
                                 unsigned letter);

  const FreeLieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const FreeLieAlgebra>& algebra_ptr() const { return algebra_; }
  const std::map<HallIndex, Rational>& terms() const { return terms_; }

  Rational coefficient(HallIndex index) const;
  void add_term(HallIndex index, const Rational& coefficient);
  bool is_zero() const { return terms_.empty(); }

  /// Part of weight exactly w.
  LiePolynomial homogeneous_part(unsigned weight) const;

  LiePolynomial& operator+=(const LiePolynomial& other);
  LiePolynomial& operator-=(const LiePolynomial& other);
  LiePolynomial& operator*=(const Rational& scale);
  friend LiePolynomial operator+(LiePolynomial a, const LiePolynomial& b) { return a += b; }
  friend LiePolynomial operator-(LiePolynomial a, const LiePolynomial& b) { return a -= b; }
  friend LiePolynomial operator*(const Rational& s, LiePolynomial a) { return a *= s; }
  LiePolynomial operator-() const;

  friend bool operator==(const LiePolynomial& a, const LiePolynomial& b);

  std::string to_string() const;

 private:
  void require_same_context(const LiePolynomial& other) const;

  std::shared_ptr<const FreeLieAlgebra> algebra_;
  std::map<HallIndex, Rational> terms_;
};

/// Lie bracket on the Hall basis; terms above the class are truncated.
LiePolynomial lie_bracket(const LiePolynomial& u, const LiePolynomial& v);

}  // namespace disposition
