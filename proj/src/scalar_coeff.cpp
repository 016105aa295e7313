#include "quatnf/scalar_coeff.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatnf {

namespace {

ScalarCoeff::Monomial merge(const ScalarCoeff::Monomial& a, const ScalarCoeff::Monomial& b) {
  ScalarCoeff::Monomial out;
  out.reserve(a.size() + b.size());
  auto less = [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); };
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
  return out;
}

}  // namespace

ScalarCoeff::ScalarCoeff(const Rational& c) {
  if (!quatnf::is_zero(c)) terms_.emplace(Monomial{}, c);
}

ScalarCoeff ScalarCoeff::symbol(int index) {
  if (index < 1 || index > 255) throw std::domain_error("scalar symbol index out of range");
  ScalarCoeff s;
  s.terms_.emplace(Monomial(1, static_cast<char>(index)), Rational(1));
  return s;
}

bool ScalarCoeff::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ScalarCoeff::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ScalarCoeff::max_symbol() const noexcept {
  int m = 0;
  for (const auto& [mono, c] : terms_) {
    for (char s : mono) m = std::max(m, static_cast<int>(static_cast<unsigned char>(s)));
  }
  return m;
}

Rational ScalarCoeff::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [mono, c] : terms_) {
    Rational t = c;
    for (char s : mono) {
      const auto idx = static_cast<std::size_t>(static_cast<unsigned char>(s));
      if (idx > values.size()) {
        throw std::domain_error("no value for scalar symbol s" + std::to_string(idx));
      }
      t *= values[idx - 1];
    }
    total += t;
  }
  return total;
}

void ScalarCoeff::add_term(const Monomial& m, const Rational& c) {
  if (quatnf::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (quatnf::is_zero(it->second)) terms_.erase(it);
  }
}

ScalarCoeff& ScalarCoeff::operator+=(const ScalarCoeff& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ScalarCoeff& ScalarCoeff::operator-=(const ScalarCoeff& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ScalarCoeff& ScalarCoeff::operator*=(const ScalarCoeff& rhs) {
  if (rhs.is_constant()) return *this *= rhs.constant_term();
  ScalarCoeff out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(merge(ma, mb), Rational(ca * cb));
  }
  terms_ = std::move(out.terms_);
  return *this;
}

ScalarCoeff& ScalarCoeff::operator*=(const Rational& rhs) {
  if (quatnf::is_zero(rhs)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

ScalarCoeff operator-(ScalarCoeff a) { return a *= Rational(-1); }

}  // namespace quatnf
