#pragma once

#include <gmpxx.h>

#include <string>

namespace cmsym {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace cmsym
