#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ricci {

// Exact rational backed by GMP; arithmetic results are always canonical.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Inverse of to_string. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace ricci
