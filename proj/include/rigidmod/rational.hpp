#pragma once

#include <gmpxx.h>

#include <string>

namespace rigidmod {

using Z = mpz_class;  // arbitrary-precision integer
using Q = mpq_class;  // arbitrary-precision rational, always canonicalized

// "n" when the denominator is 1, "n/d" otherwise (canonical form, sign on the
// numerator).
std::string q_to_string(const Q& x);

// Inverse of q_to_string; accepts "a" and "a/b".  Throws ParseError on junk.
Q q_from_string(const std::string& s);

// Renders the exponent e/24 in lowest terms: 0 -> "0", 36 -> "3/2", 7 -> "7/24".
std::string exp24_to_string(long long e);

}  // namespace rigidmod
