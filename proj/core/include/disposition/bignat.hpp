#pragma once

#include <gmpxx.h>

#include <string>

namespace disposition {

/// Arbitrary-precision nonnegative integer (exponents and ranks).
using BigNat = mpz_class;

/// Exact rational with canonical (reduced) representation.
using Rational = mpq_class;

inline std::string to_decimal(const BigNat& value) { return value.get_str(10); }

inline std::string to_decimal(const Rational& value) { return value.get_str(10); }

}  // namespace disposition
