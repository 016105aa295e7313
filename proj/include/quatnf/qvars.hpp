#pragma once

#include <cstddef>

#include "quatnf/polynomial.hpp"
#include "quatnf/qpolynomial.hpp"
#include "quatnf/rewrite.hpp"

namespace quatnf {

/// Reverses every word and bars every letter.
QPolynomial qconjugate(const QPolynomial& p);

/// (p + conj p) / 2.
QPolynomial scalar_part(const QPolynomial& p);
/// (p - conj p) / 2.
QPolynomial vector_part_q(const QPolynomial& p);

/// Substitutes q_i = s_i + v_i and q_i' = s_i - v_i, with s_i central.
ScalarPolynomial split(const QPolynomial& p);

/// split followed by normalization against gb_vector(n, max_degree). Throws
/// std::domain_error when degree(p) > max_degree or p uses an index above n.
ScalarPolynomial normalize_q(const QPolynomial& p, int n, std::size_t max_degree);

/// split followed by normalization against a prebuilt vector base.
ScalarPolynomial normalize_q(const QPolynomial& p, const RuleSet& base);

}  // namespace quatnf
