#pragma once

#include <functional>
#include <string>

#include "quatnf/polynomial.hpp"

namespace quatnf {

/// Renders one letter, e.g. 3 -> "v3".
using LetterNamer = std::function<std::string(Letter)>;

std::string vector_letter_name(Letter l);

/// Letters joined by `*`; the empty word prints as `1`.
std::string to_string(const Word& w, const LetterNamer& name = vector_letter_name);

/// e.g. `2*s1^2*s3 - 1/2`.
std::string to_string(const ScalarCoeff& c);

/// Canonical text: terms in descending word order, joined by ` + ` / ` - `,
/// unit coefficients omitted, e.g. `v1*v2*v3 - 1/2*v3*v2*v1`. Zero prints
/// as `0`. Scalar-symbol coefficients with several monomials are
/// parenthesized.
std::string to_string(const RationalPolynomial& p, const LetterNamer& name = vector_letter_name);
std::string to_string(const ScalarPolynomial& p, const LetterNamer& name = vector_letter_name);

}  // namespace quatnf
