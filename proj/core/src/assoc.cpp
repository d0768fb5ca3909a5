#include "disposition/assoc.hpp"

#include "disposition/errors.hpp"

namespace disposition {

AssocPolynomial::AssocPolynomial(std::shared_ptr<const FreeLieAlgebra> algebra)
    : algebra_(std::move(algebra)) {
  if (!algebra_) throw DomainError("AssocPolynomial needs an algebra");
  coeffs_.assign(algebra_->words().size(), Rational(0));
}

AssocPolynomial AssocPolynomial::one(std::shared_ptr<const FreeLieAlgebra> algebra) {
  AssocPolynomial out(std::move(algebra));
  out.coeffs_[0] = 1;
  return out;
}

AssocPolynomial AssocPolynomial::from_lie(const LiePolynomial& u) {
  AssocPolynomial out(u.algebra_ptr());
  for (const auto& [k, v] : u.terms()) {
    for (const auto& [word, coef] : u.algebra().expansion(k)) {
      out.coeffs_[word] += v * Rational(static_cast<long>(coef));
    }
  }
  return out;
}

AssocPolynomial AssocPolynomial::degree_part(unsigned degree) const {
  AssocPolynomial out(algebra_);
  const std::size_t begin = words().offset(degree);
  const std::size_t end = begin + words().count(degree);
  for (std::size_t i = begin; i < end; ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

std::size_t AssocPolynomial::nonzero_count() const {
  std::size_t n = 0;
  for (const Rational& q : coeffs_) n += (q != 0);
  return n;
}

AssocPolynomial& AssocPolynomial::operator+=(const AssocPolynomial& other) {
  if (algebra_ != other.algebra_) throw DomainError("AssocPolynomial context mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AssocPolynomial& AssocPolynomial::operator-=(const AssocPolynomial& other) {
  if (algebra_ != other.algebra_) throw DomainError("AssocPolynomial context mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

AssocPolynomial& AssocPolynomial::operator*=(const Rational& scale) {
  for (Rational& q : coeffs_) q *= scale;
  return *this;
}

AssocPolynomial operator*(const AssocPolynomial& a, const AssocPolynomial& b) {
  if (a.algebra_ != b.algebra_) throw DomainError("AssocPolynomial context mismatch");
  const WordIndexer& words = a.words();
  const unsigned c = words.max_length();
  AssocPolynomial out(a.algebra_);
  for (unsigned la = 0; la <= c; ++la) {
    for (std::size_t i = words.offset(la); i < words.offset(la) + words.count(la); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (unsigned lb = 0; la + lb <= c; ++lb) {
        for (std::size_t j = words.offset(lb); j < words.offset(lb) + words.count(lb); ++j) {
          if (b.coeffs_[j] == 0) continue;
          out.coeffs_[words.concat(i, j)] += a.coeffs_[i] * b.coeffs_[j];
        }
      }
    }
  }
  return out;
}

AssocPolynomial exp_series(const AssocPolynomial& x) {
  if (x[0] != 0) throw DomainError("exp_series: constant term must vanish");
  AssocPolynomial result = AssocPolynomial::one(x.algebra_ptr());
  AssocPolynomial power = result;
  for (unsigned k = 1; k <= x.words().max_length(); ++k) {
    power = power * x;
    power *= Rational(1, k);
    result += power;
  }
  return result;
}

AssocPolynomial log_series(const AssocPolynomial& x) {
  if (x[0] != 1) throw DomainError("log_series: constant term must be 1");
  AssocPolynomial z = x - AssocPolynomial::one(x.algebra_ptr());
  AssocPolynomial result(x.algebra_ptr());
  AssocPolynomial power = AssocPolynomial::one(x.algebra_ptr());
  for (unsigned k = 1; k <= x.words().max_length(); ++k) {
    power = power * z;
    AssocPolynomial term = power;
    term *= Rational(k % 2 == 1 ? 1 : -1, k);
    result += term;
  }
  return result;
}

}  // namespace disposition
