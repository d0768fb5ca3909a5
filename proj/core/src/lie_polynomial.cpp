#include "disposition/lie_polynomial.hpp"

#include <sstream>

#include "disposition/errors.hpp"

namespace disposition {

LiePolynomial::LiePolynomial(std::shared_ptr<const FreeLieAlgebra> algebra)
    : algebra_(std::move(algebra)) {
  if (!algebra_) throw DomainError("LiePolynomial needs an algebra");
}

LiePolynomial LiePolynomial::basis_element(std::shared_ptr<const FreeLieAlgebra> algebra,
                                           HallIndex index, const Rational& coefficient) {
  LiePolynomial out(std::move(algebra));
  if (index >= out.algebra().dimension()) throw DomainError("Hall index out of range");
  out.add_term(index, coefficient);
  return out;
}

LiePolynomial LiePolynomial::generator(std::shared_ptr<const FreeLieAlgebra> algebra,
                                       unsigned letter) {
  if (letter >= algebra->rank()) throw DomainError("generator index out of range");
  const HallIndex index = algebra->generator(letter);
  return basis_element(std::move(algebra), index);
}

Rational LiePolynomial::coefficient(HallIndex index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LiePolynomial::add_term(HallIndex index, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(index, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

LiePolynomial LiePolynomial::homogeneous_part(unsigned weight) const {
  LiePolynomial out(algebra_);
  for (const auto& [k, v] : terms_) {
    if (algebra_->element(k).weight == weight) out.terms_.emplace(k, v);
  }
  return out;
}

void LiePolynomial::require_same_context(const LiePolynomial& other) const {
  if (algebra_ != other.algebra_) throw DomainError("Lie polynomials from different contexts");
}

LiePolynomial& LiePolynomial::operator+=(const LiePolynomial& other) {
  require_same_context(other);
  for (const auto& [k, v] : other.terms_) add_term(k, v);
  return *this;
}

LiePolynomial& LiePolynomial::operator-=(const LiePolynomial& other) {
  require_same_context(other);
  for (const auto& [k, v] : other.terms_) add_term(k, -v);
  return *this;
}

LiePolynomial& LiePolynomial::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= scale;
  return *this;
}

LiePolynomial LiePolynomial::operator-() const {
  LiePolynomial out = *this;
  out *= Rational(-1);
  return out;
}

bool operator==(const LiePolynomial& a, const LiePolynomial& b) {
  return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
}

std::string LiePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (v != 1) out << v.get_str() << "*";
    out << algebra_->to_string(k);
  }
  return out.str();
}

LiePolynomial lie_bracket(const LiePolynomial& u, const LiePolynomial& v) {
  if (u.algebra_ptr() != v.algebra_ptr()) {
    throw DomainError("lie_bracket: operands from different contexts");
  }
  LiePolynomial out(u.algebra_ptr());
  const FreeLieAlgebra& algebra = u.algebra();
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      const IntCombination& bracket = algebra.bracket(a, b);
      if (bracket.empty()) continue;
      const Rational scale = ca * cb;
      for (const auto& [k, coef] : bracket) {
        out.add_term(k, scale * Rational(static_cast<long>(coef)));
      }
    }
  }
  return out;
}

}  // namespace disposition
