#pragma once

#include <map>
#include <span>
#include <string>

#include "quatnf/rational.hpp"
#include "quatnf/word.hpp"

namespace quatnf {

/// Commutative polynomial in the central scalar symbols s1..sn with rational
/// coefficients. A monomial is the sorted multiset of its symbol indices,
/// stored as a byte string; the constant monomial is empty.
class ScalarCoeff {
 public:
  using Monomial = std::string;
  using term_map = std::map<Monomial, Rational, DeglexGreater>;

  ScalarCoeff() = default;
  ScalarCoeff(const Rational& c);  // NOLINT: rationals embed implicitly
  ScalarCoeff(int c) : ScalarCoeff(Rational(c)) {}  // NOLINT

  static ScalarCoeff symbol(int index);

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  /// Largest symbol index present, 0 if constant.
  int max_symbol() const noexcept;

  /// Substitutes values[i-1] for s_i. Throws std::domain_error when a symbol
  /// has no value.
  Rational evaluate(std::span<const Rational> values) const;

  ScalarCoeff& operator+=(const ScalarCoeff& rhs);
  ScalarCoeff& operator-=(const ScalarCoeff& rhs);
  ScalarCoeff& operator*=(const ScalarCoeff& rhs);
  ScalarCoeff& operator*=(const Rational& rhs);

  friend ScalarCoeff operator+(ScalarCoeff a, const ScalarCoeff& b) {
    return a += b;
  }
  friend ScalarCoeff operator-(ScalarCoeff a, const ScalarCoeff& b) {
    return a -= b;
  }
  friend ScalarCoeff operator*(ScalarCoeff a, const ScalarCoeff& b) {
    return a *= b;
  }
  friend ScalarCoeff operator*(ScalarCoeff a, const Rational& b) {
    return a *= b;
  }
  friend ScalarCoeff operator*(const Rational& b, ScalarCoeff a) {
    return a *= b;
  }
  friend ScalarCoeff operator-(ScalarCoeff a);

  friend bool operator==(const ScalarCoeff&, const ScalarCoeff&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  term_map terms_;
};

inline bool is_zero(const ScalarCoeff& c) { return c.is_zero(); }

}  // namespace quatnf
