#pragma once

#include <random>
#include <vector>

#include "quatnf/polynomial.hpp"
#include "quatnf/qpolynomial.hpp"

namespace quatnf::test {

inline RationalPolynomial v(int i) { return RationalPolynomial::variable(i); }

inline RationalPolynomial w(std::initializer_list<int> letters) { return RationalPolynomial::term(Word(letters)); }

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline RationalPolynomial c(long num, long den = 1) { return RationalPolynomial(q(num, den)); }

inline Word random_word(std::mt19937_64& rng, int n, std::size_t length) {
  std::uniform_int_distribution<int> letter(1, n);
  Word out;
  for (std::size_t i = 0; i < length; ++i) out *= Word::letter(letter(rng));
  return out;
}

/// Up to `max_terms` terms with small nonzero rational coefficients.
inline RationalPolynomial random_polynomial(std::mt19937_64& rng, int n, std::size_t max_degree,
                                            std::size_t max_terms = 6) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms), length(0, max_degree);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  RationalPolynomial p;
  const std::size_t count = terms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    int a = 0;
    while (a == 0) a = num(rng);
    p.add_term(random_word(rng, n, length(rng)), q(a, den(rng)));
  }
  return p;
}

/// A product of `length` random letters from q1, q1', ..., qn, qn'.
inline QPolynomial random_qword(std::mt19937_64& rng, int n, std::size_t length) {
  std::uniform_int_distribution<int> index(1, n), bar(0, 1);
  QPolynomial out(Rational(1));
  for (std::size_t i = 0; i < length; ++i) out = out * QPolynomial::p(index(rng), bar(rng) == 1);
  return out;
}

}  // namespace quatnf::test
