#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "disposition/bignat.hpp"

namespace disposition {

/// Largest d^n that lyndon_count agrees to enumerate.
inline constexpr std::uint64_t kLyndonEnumerationLimit = 100'000'000;

bool is_prime(std::uint64_t n);

/// Positive divisors of n in increasing order (trial division up to sqrt(n)).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Moebius function; throws DomainError for m == 0.
int mobius(std::uint64_t m);

/// The raw Moebius sum  sum_{m|n} mu(m) d^{n/m}, before division by n.
BigNat witt_numerator(std::uint64_t n, const BigNat& d);

/// Witt's formula chi_n(d): rank of gamma_n(F)/gamma_{n+1}(F) for F free of rank d.
/// Results are memoized per (n, d); the cache is safe for concurrent use.
BigNat witt(std::uint64_t n, const BigNat& d);
BigNat witt(std::uint64_t n, std::uint64_t d);

/// Counts Lyndon words of length n over d letters by brute-force enumeration.
/// Independent of witt(); throws DomainError when d^n exceeds kLyndonEnumerationLimit.
BigNat lyndon_count(unsigned n, unsigned d);

/// chi_{m_t+1}( ... chi_{m_2+1}(s) ... ) for tail = (m_2, ..., m_t).
/// Values grow doubly exponentially; nothing is truncated.
BigNat nested_chi(std::span<const unsigned> tail, const BigNat& s);

/// Number of entries currently held by the witt memo (diagnostics only).
std::size_t witt_cache_size();

}  // namespace disposition
