#include "disposition/group.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "disposition/errors.hpp"

namespace disposition {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;  // a, b < m < 2^62
  return s >= m ? s - m : s;
}

std::uint64_t signed_mod(std::int64_t value, std::uint64_t m) {
  const std::int64_t r = value % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

}  // namespace

std::shared_ptr<const DispositionGroup> DispositionGroup::get(const GroupParams& params) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, unsigned>,
                  std::shared_ptr<const DispositionGroup>>
      cache;
  const GroupParams checked = GroupParams::make(params.p, params.d, params.c);
  std::lock_guard lock(mutex);
  auto& slot = cache[{checked.p, checked.d, checked.c}];
  if (!slot) slot = std::make_shared<const DispositionGroup>(checked);
  return slot;
}

DispositionGroup::DispositionGroup(const GroupParams& params) : params_(params) {
  if (params_.p <= params_.c) {
    throw LazardRangeError("Lazard range: the concrete engine needs p > c (got " +
                           to_string(params_) + ")");
  }
  for (unsigned i = 0; i < params_.c; ++i) {
    if (ring_modulus_ > (std::uint64_t{1} << 62) / params_.p) {
      throw DomainError("coordinate modulus p^c exceeds 2^62");
    }
    ring_modulus_ *= params_.p;
  }

  algebra_ = FreeLieAlgebra::get(params_.d, params_.c);
  template_ = BchTemplate::get(params_.c);

  const std::size_t n = algebra_->dimension();
  moduli_.resize(n);
  weights_.resize(n);
  for (const HallElement& e : algebra_->basis()) {
    weights_[e.index] = e.weight;
    std::uint64_t m = 1;
    for (unsigned i = 0; i < params_.c + 1 - e.weight; ++i) m *= params_.p;
    moduli_[e.index] = m;
  }

  structure_.resize(n * n);
  for (HallIndex a = 0; a < n; ++a) {
    for (HallIndex b = 0; b < n; ++b) {
      for (const auto& [k, coef] : algebra_->bracket(a, b)) {
        const std::uint64_t r = signed_mod(coef, ring_modulus_);
        if (r != 0) structure_[a * n + b].emplace_back(k, r);
      }
    }
  }

  template_coeffs_.assign(template_->algebra->dimension(), 0);
  for (const auto& [k, q] : template_->terms) {
    // weight-1 modulus is p^c, the ring modulus
    template_coeffs_[k] = reduce_rational(q, 1);
  }
}

unsigned long DispositionGroup::order_exponent() const {
  unsigned long total = 0;
  for (unsigned w : weights_) total += params_.c + 1 - w;
  return total;
}

std::uint64_t DispositionGroup::reduce_rational(const Rational& q, unsigned weight) const {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < params_.c + 1 - weight; ++i) m *= params_.p;
  const mpz_class modulus(static_cast<unsigned long>(m));
  mpz_class num;
  mpz_fdiv_r(num.get_mpz_t(), q.get_num_mpz_t(), modulus.get_mpz_t());
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), modulus.get_mpz_t()) == 0 && m != 1) {
    throw LazardRangeError("Lazard range: denominator " + q.get_den().get_str() +
                           " is not invertible mod p");
  }
  if (m == 1) return 0;
  mpz_class r = (num * inv) % modulus;
  return r.get_ui();
}

Coords DispositionGroup::canonical(Coords a) const {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] %= moduli_[k];
  return a;
}

Coords DispositionGroup::bracket(const Coords& a, const Coords& b) const {
  const std::size_t n = dimension();
  const std::uint64_t m = ring_modulus_;
  Coords out(n, 0);
  for (HallIndex i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (HallIndex j = 0; j < n; ++j) {
      if (b[j] == 0 || weights_[i] + weights_[j] > params_.c) continue;
      const std::uint64_t ab = mulmod(a[i], b[j], m);
      for (const auto& [k, coef] : structure_[i * n + j]) {
        out[k] = addmod(out[k], mulmod(ab, coef, m), m);
      }
    }
  }
  return out;
}

Coords DispositionGroup::multiply(const Coords& a, const Coords& b) const {
  const std::size_t n = dimension();
  const std::uint64_t m = ring_modulus_;
  Coords lhs(n), rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    lhs[k] = a[k] % m;
    rhs[k] = b[k] % m;
  }

  const FreeLieAlgebra& two = *template_->algebra;
  std::vector<Coords> values(two.dimension());
  Coords out(n, 0);
  for (const HallElement& node : two.basis()) {
    Coords& value = values[node.index];
    if (node.is_generator()) {
      value = node.letter == 0 ? lhs : rhs;
    } else {
      value = bracket(values[node.left], values[node.right]);
    }
    const std::uint64_t coef = template_coeffs_[node.index];
    if (coef == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (value[k] != 0) out[k] = addmod(out[k], mulmod(coef, value[k], m), m);
    }
  }
  return canonical(std::move(out));
}

Coords DispositionGroup::inverse(const Coords& a) const {
  Coords out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::uint64_t r = a[k] % moduli_[k];
    out[k] = r == 0 ? 0 : moduli_[k] - r;
  }
  return out;
}

Coords DispositionGroup::power(const Coords& a, std::int64_t n) const {
  Coords out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = mulmod(a[k] % moduli_[k], signed_mod(n, moduli_[k]), moduli_[k]);
  }
  return out;
}

Coords DispositionGroup::commutator(const Coords& a, const Coords& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

Coords DispositionGroup::conjugate(const Coords& a, const Coords& by) const {
  return multiply(multiply(inverse(by), a), by);
}

bool DispositionGroup::is_identity(const Coords& a) const {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] % moduli_[k] != 0) return false;
  }
  return true;
}

GroupElement DispositionGroup::identity() const {
  return GroupElement(shared_from_this(), Coords(dimension(), 0));
}

GroupElement DispositionGroup::generator(unsigned letter) const {
  if (letter >= params_.d) throw DomainError("generator index out of range");
  Coords coords(dimension(), 0);
  coords[algebra_->generator(letter)] = 1;
  return GroupElement(shared_from_this(), std::move(coords));
}

std::vector<GroupElement> DispositionGroup::generators() const {
  std::vector<GroupElement> out;
  for (unsigned i = 0; i < params_.d; ++i) out.push_back(generator(i));
  return out;
}

GroupElement DispositionGroup::element(Coords coords) const {
  if (coords.size() != dimension()) throw DomainError("coordinate vector has wrong length");
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] >= moduli_[k]) throw DomainError("coordinate out of range");
  }
  return GroupElement(shared_from_this(), std::move(coords));
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) out << (k ? "," : "") << coords_[k];
  out << ")";
  return out.str();
}

LiePolynomial lift(const GroupElement& g) {
  LiePolynomial out(g.group().algebra_ptr());
  for (std::size_t k = 0; k < g.coords().size(); ++k) {
    out.add_term(k, Rational(static_cast<unsigned long>(g.coords()[k])));
  }
  return out;
}

GroupElement reduce(const LiePolynomial& u, const std::shared_ptr<const DispositionGroup>& group) {
  if (u.algebra_ptr() != group->algebra_ptr()) {
    throw DomainError("reduce: Lie polynomial and group have different (d, c)");
  }
  Coords coords(group->dimension(), 0);
  for (const auto& [k, q] : u.terms()) {
    coords[k] = group->reduce_rational(q, u.algebra().element(k).weight);
  }
  return GroupElement(group, std::move(coords));
}

GroupElement reduce(const LiePolynomial& u, const GroupParams& params) {
  return reduce(u, DispositionGroup::get(params));
}

namespace {
void require_same_group(const GroupElement& g, const GroupElement& h) {
  if (g.group_ptr() != h.group_ptr()) throw DomainError("group elements from different contexts");
}
}  // namespace

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h);
  return GroupElement(g.group_ptr(), g.group().multiply(g.coords(), h.coords()));
}

GroupElement multiply_reference(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h);
  return reduce(bch_log_product(lift(g), lift(h)), g.group_ptr());
}

GroupElement inverse(const GroupElement& g) {
  return GroupElement(g.group_ptr(), g.group().inverse(g.coords()));
}

GroupElement power(const GroupElement& g, std::int64_t n) {
  return GroupElement(g.group_ptr(), g.group().power(g.coords(), n));
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h);
  return GroupElement(g.group_ptr(), g.group().commutator(g.coords(), h.coords()));
}

PrimePowerOrder element_order(const GroupElement& g) {
  const DispositionGroup& group = g.group();
  const std::uint64_t p = group.params().p;
  Coords x = g.coords();
  unsigned long e = 0;
  while (!group.is_identity(x)) {
    x = group.power(x, static_cast<std::int64_t>(p));
    ++e;
    if (e > group.params().c) throw std::logic_error("element order exceeds p^c");
  }
  return PrimePowerOrder{p, BigNat(e)};
}

}  // namespace disposition
