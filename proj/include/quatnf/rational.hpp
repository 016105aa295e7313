#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quatnf {

/// Arbitrary-precision rational, always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Parses `a` or `a/b` with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// `a` or `a/b` in lowest terms.
std::string to_string(const Rational& r);

}  // namespace quatnf
