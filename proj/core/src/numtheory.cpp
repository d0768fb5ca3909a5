#include "disposition/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "disposition/errors.hpp"

namespace disposition {
namespace {

struct WittKey {
  std::uint64_t n;
  BigNat d;

  bool operator<(const WittKey& other) const {
    if (n != other.n) return n < other.n;
    return cmp(d, other.d) < 0;
  }
};

class WittMemo {
 public:
  bool lookup(const WittKey& key, BigNat& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  // Idempotent: racing writers store the same value.
  void store(WittKey key, const BigNat& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<WittKey, BigNat> table_;
};

WittMemo& memo() {
  static WittMemo instance;
  return instance;
}

// A word is Lyndon iff it is strictly smaller than each of its proper rotations.
bool is_lyndon(const std::vector<unsigned>& word) {
  const std::size_t n = word.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned a = word[i];
      const unsigned b = word[(i + shift) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: periodic
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors: n must be positive");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t f = 1; f <= n / f; ++f) {
    if (n % f != 0) continue;
    small.push_back(f);
    if (f != n / f) large.push_back(n / f);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::uint64_t m) {
  if (m == 0) throw DomainError("mobius: argument must be >= 1");
  int sign = 1;
  for (std::uint64_t f = 2; f <= m / f; ++f) {
    if (m % f != 0) continue;
    m /= f;
    if (m % f == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

BigNat witt_numerator(std::uint64_t n, const BigNat& d) {
  if (n == 0) throw DomainError("witt: n must be >= 1");
  BigNat sum = 0;
  for (std::uint64_t m : divisors(n)) {
    const int mu = mobius(m);
    if (mu == 0) continue;
    BigNat term;
    mpz_pow_ui(term.get_mpz_t(), d.get_mpz_t(), n / m);
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigNat witt(std::uint64_t n, const BigNat& d) {
  if (n == 0) throw DomainError("witt: n must be >= 1");
  if (d < 0) throw DomainError("witt: d must be >= 0");
  WittKey key{n, d};
  BigNat cached;
  if (memo().lookup(key, cached)) return cached;

  const BigNat numerator = witt_numerator(n, d);
  const BigNat divisor = static_cast<unsigned long>(n);
  if (!mpz_divisible_p(numerator.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error("witt: Moebius sum not divisible by n");
  }
  BigNat value = numerator / divisor;
  memo().store(std::move(key), value);
  return value;
}

BigNat witt(std::uint64_t n, std::uint64_t d) {
  return witt(n, BigNat(static_cast<unsigned long>(d)));
}

BigNat lyndon_count(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw DomainError("lyndon_count: n and d must be >= 1");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= d;
    if (total > kLyndonEnumerationLimit) {
      throw DomainError("lyndon_count: enumeration guard exceeded (d^n > 10^8)");
    }
  }

  std::vector<unsigned> word(n, 0);
  unsigned long count = 0;
  for (std::uint64_t w = 0; w < total; ++w) {
    if (is_lyndon(word)) ++count;
    // odometer increment, last letter fastest
    for (std::size_t pos = n; pos-- > 0;) {
      if (++word[pos] < d) break;
      word[pos] = 0;
    }
  }
  return BigNat(count);
}

BigNat nested_chi(std::span<const unsigned> tail, const BigNat& s) {
  if (s < 0) throw DomainError("nested_chi: s must be >= 0");
  BigNat value = s;
  for (unsigned m : tail) {
    if (m == 0) throw DomainError("nested_chi: class row entries must be >= 1");
    value = witt(m + 1, value);
  }
  return value;
}

std::size_t witt_cache_size() { return memo().size(); }

}  // namespace disposition
