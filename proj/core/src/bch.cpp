#include "disposition/bch.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "disposition/errors.hpp"

namespace disposition {

LiePolynomial dynkin_project(const AssocPolynomial& p) {
  const FreeLieAlgebra& algebra = p.algebra();
  const WordIndexer& words = algebra.words();
  LiePolynomial out(p.algebra_ptr());
  for (unsigned n = 1; n <= words.max_length(); ++n) {
    const Rational scale(1, n);
    for (std::size_t w = words.offset(n); w < words.offset(n) + words.count(n); ++w) {
      if (p[w] == 0) continue;
      const Rational coef = p[w] * scale;
      for (const auto& [k, v] : algebra.left_normed(words.word(w))) {
        out.add_term(k, coef * Rational(static_cast<long>(v)));
      }
    }
  }
  return out;
}

BchResult bch_log_product_checked(const LiePolynomial& u, const LiePolynomial& v) {
  if (u.algebra_ptr() != v.algebra_ptr()) {
    throw DomainError("bch_log_product: operands from different contexts");
  }
  const AssocPolynomial product =
      exp_series(AssocPolynomial::from_lie(u)) * exp_series(AssocPolynomial::from_lie(v));
  const AssocPolynomial log = log_series(product);

  BchResult result{dynkin_project(log), 0};
  const AssocPolynomial residual = AssocPolynomial::from_lie(result.value) - log;
  result.residual_terms = residual.nonzero_count();
  return result;
}

LiePolynomial bch_log_product(const LiePolynomial& u, const LiePolynomial& v) {
  BchResult result = bch_log_product_checked(u, v);
  if (result.residual_terms != 0) {
    throw std::logic_error("bch_log_product: Dynkin residual is nonzero");
  }
  return std::move(result.value);
}

std::shared_ptr<const BchTemplate> BchTemplate::get(unsigned c) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const BchTemplate>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[c];
  if (!slot) {
    auto algebra = FreeLieAlgebra::get(2, c);
    const LiePolynomial z = bch_log_product(LiePolynomial::generator(algebra, 0),
                                            LiePolynomial::generator(algebra, 1));
    auto tmpl = std::make_shared<BchTemplate>();
    tmpl->algebra = algebra;
    tmpl->terms.assign(z.terms().begin(), z.terms().end());
    slot = std::move(tmpl);
  }
  return slot;
}

}  // namespace disposition
