#pragma once

#include <gmpxx.h>

#include <string>

namespace schur {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& s);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace schur
