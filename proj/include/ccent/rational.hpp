#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ccent {

// All score payloads are exact rationals: axiom checks hinge on exact ties,
// so nothing in the library ever rounds.
using Rational = mpq_class;
using BigInt = mpz_class;

// mpq_class(p, q) does not reduce; this does.  Use it whenever numerator and
// denominator may share a factor.
Rational make_rational(int64_t num, int64_t den);

// Accepts "p/q", plain integers, and decimal literals such as "0.8"
// (parsed as 8/10 and canonicalized). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline int sign_of(const Rational& r) { return sgn(r); }

}  // namespace ccent
