#include "disposition/class2.hpp"

#include "disposition/errors.hpp"

namespace disposition {

std::shared_ptr<const Class2Group> Class2Group::make(const GroupParams& params) {
  return std::make_shared<const Class2Group>(GroupParams::make(params.p, params.d, params.c));
}

Class2Group::Class2Group(const GroupParams& params) : params_(params) {
  if (params_.c != 2) throw DomainError("class-2 collected model needs c = 2");
  algebra_ = FreeLieAlgebra::get(params_.d, 2);
  p_ = params_.p;
  p2_ = p_ * p_;
  commutator_slot_.assign(params_.d * params_.d, 0);
  for (const HallElement& e : algebra_->basis()) {
    if (e.weight != 2) continue;
    const unsigned i = static_cast<unsigned>(algebra_->element(e.left).letter);
    const unsigned j = static_cast<unsigned>(algebra_->element(e.right).letter);
    commutator_slot_[i * params_.d + j] = e.index;
  }
}

Coords Class2Group::generator(unsigned letter) const {
  if (letter >= params_.d) throw DomainError("generator index out of range");
  Coords out = identity();
  out[algebra_->generator(letter)] = 1;
  return out;
}

Coords Class2Group::multiply(const Coords& g, const Coords& h) const {
  const unsigned d = params_.d;
  Coords out(dimension(), 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (g[k] + h[k]) % modulus(k);
  // Moving x_i^{h_i} left past x_j^{g_j} (j > i) leaves [x_j, x_i]^{g_j h_i}.
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) {
      const HallIndex slot = commutator_slot_[i * d + j];
      const std::uint64_t gj = g[algebra_->generator(j)] % p_;
      const std::uint64_t hi = h[algebra_->generator(i)] % p_;
      const std::uint64_t shift = gj * hi % p_;
      out[slot] = (out[slot] + p_ - shift) % p_;
    }
  }
  return out;
}

Coords Class2Group::to_lazard(const Coords& collected) const {
  if (p_ == 2) throw LazardRangeError("Lazard coordinates need p > 2 for class 2");
  const unsigned d = params_.d;
  const std::uint64_t half = (p_ + 1) / 2;  // inverse of 2 mod p
  Coords out = collected;
  // x_1^{a_1}...x_d^{a_d} = exp(sum a_i x_i + 1/2 sum_{i<j} a_i a_j [x_i,x_j])
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) {
      const HallIndex slot = commutator_slot_[i * d + j];
      const std::uint64_t ai = collected[algebra_->generator(i)] % p_;
      const std::uint64_t aj = collected[algebra_->generator(j)] % p_;
      out[slot] = (out[slot] + ai * aj % p_ * half) % p_;
    }
  }
  return out;
}

Coords Class2Group::from_lazard(const Coords& lazard) const {
  if (p_ == 2) throw LazardRangeError("Lazard coordinates need p > 2 for class 2");
  const unsigned d = params_.d;
  const std::uint64_t half = (p_ + 1) / 2;
  Coords out = lazard;
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) {
      const HallIndex slot = commutator_slot_[i * d + j];
      const std::uint64_t ai = lazard[algebra_->generator(i)] % p_;
      const std::uint64_t aj = lazard[algebra_->generator(j)] % p_;
      out[slot] = (out[slot] + p_ - ai * aj % p_ * half % p_) % p_;
    }
  }
  return out;
}

Coords class2_multiply(const Class2Group& group, const Coords& g, const Coords& h) {
  return group.multiply(g, h);
}

}  // namespace disposition
