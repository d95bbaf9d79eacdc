#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace radix {

/// Arbitrary-precision integer used for every coordinate and matrix entry.
using Integer = mpz_class;

/// Least nonnegative residue of `a` modulo `m` (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

/// Floor of a / b (b != 0).
Integer floor_div(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

}  // namespace radix
