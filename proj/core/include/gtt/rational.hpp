#pragma once

#include <gmpxx.h>

#include <string>

namespace gtt {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" in base 10. Throws std::invalid_argument on
// malformed input or zero denominator. Result is canonicalized.
Rat parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rational_to_string(const Rat& q);

// Exact binomial coefficient C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Rat binom(long n, long k);

// n! as an exact integer. Requires n >= 0.
Rat factorial(long n);

// 2^e for possibly negative e.
Rat pow2(long e);

}  // namespace gtt
