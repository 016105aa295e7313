#include "quatnf/qvars.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "quatnf/format.hpp"
#include "quatnf/syzygy.hpp"

namespace quatnf {

QPolynomial QPolynomial::q(int i) { return QPolynomial(RationalPolynomial::term(Word{qletter::q(i)})); }
QPolynomial QPolynomial::qbar(int i) { return QPolynomial(RationalPolynomial::term(Word{qletter::qbar(i)})); }

std::string q_letter_name(Letter l) {
  std::string out = "q" + std::to_string(qletter::index(l));
  if (qletter::is_bar(l)) out += '\'';
  return out;
}

std::string to_string(const QPolynomial& p) { return to_string(p.body(), q_letter_name); }

QPolynomial qconjugate(const QPolynomial& p) {
  return QPolynomial(transform_words(p.body(), [](const Word& w) {
    std::string bytes = w.reversed().bytes();
    for (char& c : bytes) c = static_cast<char>(qletter::bar(static_cast<Letter>(c)));
    return std::pair{Word(bytes), false};
  }));
}

QPolynomial scalar_part(const QPolynomial& p) { return (p + qconjugate(p)) * Rational(1, 2); }

QPolynomial vector_part_q(const QPolynomial& p) { return (p - qconjugate(p)) * Rational(1, 2); }

ScalarPolynomial split(const QPolynomial& p) {
  std::unordered_map<Letter, ScalarPolynomial> image;
  auto letter_image = [&](Letter l) -> const ScalarPolynomial& {
    auto it = image.find(l);
    if (it != image.end()) return it->second;
    const int i = qletter::index(l);
    ScalarPolynomial s(ScalarCoeff::symbol(i));
    ScalarPolynomial v = ScalarPolynomial::variable(i);
    return image.emplace(l, qletter::is_bar(l) ? s - v : s + v).first->second;
  };

  ScalarPolynomial out;
  for (const auto& [w, c] : p.body().terms()) {
    ScalarPolynomial prod{ScalarCoeff(c)};
    for (Letter l : w) prod = prod * letter_image(l);
    out += prod;
  }
  return out;
}

ScalarPolynomial normalize_q(const QPolynomial& p, int n, std::size_t max_degree) {
  if (p.degree() > max_degree) throw std::domain_error("polynomial degree exceeds the degree bound");
  if (p.max_index() > n) throw std::domain_error("polynomial uses a variable index above n");
  return normalize_q(p, gb_vector(std::max(n, 1), std::max<std::size_t>(max_degree, 3)));
}

ScalarPolynomial normalize_q(const QPolynomial& p, const RuleSet& base) { return normalize(split(p), base); }

}  // namespace quatnf
