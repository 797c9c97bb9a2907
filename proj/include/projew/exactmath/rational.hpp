#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "projew/errors.hpp"

namespace projew::exactmath {

using BigInt = mpz_class;

// Exact rationals over arbitrary-precision integers, the base field Q.
// GMP's mpq maintains the canonical form we rely on everywhere:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivideByZeroError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" and "p/q" with optional sign.
inline BigRational rational_from_string(const std::string& text) {
  BigRational r;
  try {
    r = BigRational(text, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + text + "'", 0);
  }
  if (r.get_den() == 0)
    throw ParseError("zero denominator in rational literal '" + text + "'", 0);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline bool is_zero(const BigRational& r) { return sgn(r) == 0; }

}  // namespace projew::exactmath
