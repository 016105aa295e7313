#include "quatnf/format.hpp"

#include <vector>

namespace quatnf {

namespace {

std::string monomial_string(const ScalarCoeff::Monomial& m) {
  std::string out;
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += '*';
    out += 's' + std::to_string(static_cast<int>(static_cast<unsigned char>(m[i])));
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Joins a magnitude with a product body, dropping a unit magnitude.
std::string with_magnitude(const Rational& magnitude, const std::string& body) {
  if (body.empty()) return to_string(magnitude);
  if (magnitude == 1) return body;
  return to_string(magnitude) + "*" + body;
}

struct SignedTerm {
  bool negative;
  std::string body;
};

SignedTerm render_term(const Rational& c, const std::string& rest) {
  return {sgn(c) < 0, with_magnitude(abs(c), rest)};
}

SignedTerm render_term(const ScalarCoeff& c, const std::string& word) {
  if (c.terms().size() == 1) {
    const auto& [mono, r] = *c.terms().begin();
    std::string rest = monomial_string(mono);
    if (!word.empty()) rest += (rest.empty() ? "" : "*") + word;
    return render_term(r, rest);
  }
  std::string body = "(" + to_string(c) + ")";
  if (!word.empty()) body += "*" + word;
  return {false, body};
}

std::string join(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += '-';
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

template <class C>
std::string polynomial_string(const Polynomial<C>& p, const LetterNamer& name) {
  std::vector<SignedTerm> terms;
  terms.reserve(p.size());
  for (const auto& [w, c] : p.terms()) {
    terms.push_back(render_term(c, w.empty() ? std::string{} : to_string(w, name)));
  }
  return join(terms);
}

}  // namespace

std::string vector_letter_name(Letter l) { return "v" + std::to_string(static_cast<int>(l)); }

std::string to_string(const Word& w, const LetterNamer& name) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += '*';
    out += name(l);
  }
  return out;
}

std::string to_string(const ScalarCoeff& c) {
  std::vector<SignedTerm> terms;
  for (const auto& [mono, r] : c.terms()) terms.push_back(render_term(r, monomial_string(mono)));
  return join(terms);
}

std::string to_string(const RationalPolynomial& p, const LetterNamer& name) {
  return polynomial_string(p, name);
}

std::string to_string(const ScalarPolynomial& p, const LetterNamer& name) {
  return polynomial_string(p, name);
}

}  // namespace quatnf
