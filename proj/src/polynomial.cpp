#include "quatnf/polynomial.hpp"

#include <stdexcept>

namespace quatnf {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

ScalarPolynomial lift(const RationalPolynomial& p) {
  ScalarPolynomial out;
  for (const auto& [w, c] : p.terms()) out.add_term(w, ScalarCoeff(c));
  return out;
}

RationalPolynomial bracket(const Word& w) {
  return bracket(RationalPolynomial::term(w));
}

RationalPolynomial vector_part(const Word& w) {
  return vector_part(RationalPolynomial::term(w));
}

}  // namespace quatnf
