#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "disposition/assoc.hpp"
#include "disposition/lie_polynomial.hpp"

namespace disposition {

/// Maps each homogeneous degree-n component P_n of an associative polynomial to
/// (1/n) times its left-normed bracketing, expressed on the Hall basis. This is
/// the identity on Lie elements. The constant term is ignored.
LiePolynomial dynkin_project(const AssocPolynomial& p);

struct BchResult {
  LiePolynomial value;
  /// Nonzero coefficients of log(e^u e^v) - (Dynkin projection); zero for a Lie element.
  std::size_t residual_terms = 0;
};

/// log(exp(u) exp(v)) truncated at the class, computed by formal exp/log in the
/// free associative algebra and projected back to the Hall basis.
BchResult bch_log_product_checked(const LiePolynomial& u, const LiePolynomial& v);

/// As bch_log_product_checked, throwing std::logic_error on a nonzero residual.
LiePolynomial bch_log_product(const LiePolynomial& u, const LiePolynomial& v);

/// The BCH series Z(X, Y) of class c on two letters, as rational multiples of
/// Hall basis elements of the rank-2 free Lie algebra. Evaluating the brackets at
/// (X, Y) = (u, v) in any class-c Lie ring gives log(e^u e^v).
struct BchTemplate {
  std::shared_ptr<const FreeLieAlgebra> algebra;  // rank 2, class c
  std::vector<std::pair<HallIndex, Rational>> terms;

  static std::shared_ptr<const BchTemplate> get(unsigned c);
};

}  // namespace disposition
