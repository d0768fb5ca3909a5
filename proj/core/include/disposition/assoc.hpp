#pragma once

#include <memory>
#include <vector>

#include "disposition/bignat.hpp"
#include "disposition/free_lie.hpp"
#include "disposition/lie_polynomial.hpp"

namespace disposition {

/// Dense element of the free associative algebra on d letters, truncated above
/// degree c, with exact rational coefficients. Shares the (d, c) context of a
/// FreeLieAlgebra.
class AssocPolynomial {
 public:
  explicit AssocPolynomial(std::shared_ptr<const FreeLieAlgebra> algebra);

  static AssocPolynomial one(std::shared_ptr<const FreeLieAlgebra> algebra);
  /// Image of a Lie polynomial under [u,v] -> uv - vu.
  static AssocPolynomial from_lie(const LiePolynomial& u);

  const FreeLieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const FreeLieAlgebra>& algebra_ptr() const { return algebra_; }
  const WordIndexer& words() const { return algebra_->words(); }

  const Rational& operator[](std::size_t word) const { return coeffs_[word]; }
  Rational& operator[](std::size_t word) { return coeffs_[word]; }
  std::size_t size() const { return coeffs_.size(); }

  AssocPolynomial degree_part(unsigned degree) const;
  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

  AssocPolynomial& operator+=(const AssocPolynomial& other);
  AssocPolynomial& operator-=(const AssocPolynomial& other);
  AssocPolynomial& operator*=(const Rational& scale);
  friend AssocPolynomial operator+(AssocPolynomial a, const AssocPolynomial& b) { return a += b; }
  friend AssocPolynomial operator-(AssocPolynomial a, const AssocPolynomial& b) { return a -= b; }
  friend AssocPolynomial operator*(const AssocPolynomial& a, const AssocPolynomial& b);

  friend bool operator==(const AssocPolynomial& a, const AssocPolynomial& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const FreeLieAlgebra> algebra_;
  std::vector<Rational> coeffs_;
};

/// exp(x) = sum x^k / k!; x must have zero constant term.
AssocPolynomial exp_series(const AssocPolynomial& x);

/// log(x) = sum (-1)^{k+1} (x-1)^k / k; x must have constant term 1.
AssocPolynomial log_series(const AssocPolynomial& x);

}  // namespace disposition
