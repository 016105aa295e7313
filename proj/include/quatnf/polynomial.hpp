#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "quatnf/rational.hpp"
#include "quatnf/scalar_coeff.hpp"
#include "quatnf/word.hpp"

namespace quatnf {

template <class C>
concept Coefficient = requires(C a, const C& b, const Rational& r) {
  { a += b } -> std::same_as<C&>;
  { a -= b } -> std::same_as<C&>;
  { a *= r } -> std::same_as<C&>;
  { is_zero(b) } -> std::convertible_to<bool>;
  C(1);
};

/// Element of the free associative algebra: a finite map from words to
/// nonzero coefficients. Terms iterate from the leading (greatest) word down.
///
/// `C` is either Rational, or ScalarCoeff when central scalar symbols are in
/// play. Scalar symbols commute with every letter by construction.
template <Coefficient C>
class Polynomial {
 public:
  using coeff_type = C;
  using term_map = std::map<Word, C, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(const C& constant) {
    if (!quatnf::is_zero(constant)) terms_.emplace(Word{}, constant);
  }

  static Polynomial term(Word w, C c = C(1)) {
    Polynomial p;
    if (!quatnf::is_zero(c)) p.terms_.emplace(std::move(w), std::move(c));
    return p;
  }
  static Polynomial variable(int index) { return term(Word::letter(index)); }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest word length; 0 for the zero polynomial.
  std::size_t degree() const noexcept {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
    return d;
  }

  const Word& leading_word() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading word");
    return terms_.begin()->first;
  }
  const C& leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
  }

  C coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Largest letter index occurring in any word.
  Letter max_letter() const noexcept {
    Letter m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.max_letter());
    return m;
  }

  void add_term(const Word& w, const C& c) {
    if (quatnf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (quatnf::is_zero(it->second)) terms_.erase(it);
    }
  }

  void sub_term(const Word& w, const C& c) {
    if (quatnf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w);
    it->second -= c;
    if (quatnf::is_zero(it->second)) terms_.erase(it);
  }

  /// Removes and returns the leading term. Precondition: nonzero.
  std::pair<Word, C> pop_leading() {
    auto node = terms_.extract(terms_.begin());
    return {std::move(node.key()), std::move(node.mapped())};
  }

  /// Appends a term below every stored word. Precondition: `w` is smaller
  /// than all current words and `c` is nonzero.
  void push_back_lower(Word w, C c) { terms_.emplace_hint(terms_.end(), std::move(w), std::move(c)); }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) sub_term(w, c);
    return *this;
  }
  Polynomial& operator*=(const Rational& r) {
    if (quatnf::is_zero(r)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= r;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
  friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }

  /// Concatenation product extended bilinearly.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        C c = ca;
        c *= cb;
        out.add_term(wa * wb, c);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  term_map terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using ScalarPolynomial = Polynomial<ScalarCoeff>;

// Free-function spellings of the ring operations.
template <Coefficient C>
Polynomial<C> add(const Polynomial<C>& p, const Polynomial<C>& q) { return p + q; }
template <Coefficient C>
Polynomial<C> mul(const Polynomial<C>& p, const Polynomial<C>& q) { return p * q; }
template <Coefficient C>
Polynomial<C> scale(const C& c, const Polynomial<C>& p) {
  Polynomial<C> out;
  if (is_zero(c)) return out;
  for (const auto& [w, pc] : p.terms()) {
    C t = c;
    t *= pc;
    out.add_term(w, t);
  }
  return out;
}

/// Embeds a rational polynomial into the scalar-symbol coefficient ring.
ScalarPolynomial lift(const RationalPolynomial& p);

/// Word-wise transform `f : Word -> Word` with a per-word sign.
template <Coefficient C, class F>
Polynomial<C> transform_words(const Polynomial<C>& p, F&& f) {
  Polynomial<C> out;
  for (const auto& [w, c] : p.terms()) {
    auto [image, negate] = f(w);
    if (negate) {
      out.sub_term(image, c);
    } else {
      out.add_term(image, c);
    }
  }
  return out;
}

/// Reverses the letters of every word (the dagger anti-automorphism).
template <Coefficient C>
Polynomial<C> reversion(const Polynomial<C>& p) {
  return transform_words(p, [](const Word& w) { return std::pair{w.reversed(), false}; });
}

/// Quaternionic conjugation of a vector-letter polynomial: each letter is
/// pure imaginary, so a word of length k maps to (-1)^k times its reversal.
template <Coefficient C>
Polynomial<C> conjugate(const Polynomial<C>& p) {
  return transform_words(p, [](const Word& w) {
    return std::pair{w.reversed(), w.degree() % 2 == 1};
  });
}

/// [W] = (W + (-1)^k W^dagger) / 2 for a word of length k.
RationalPolynomial bracket(const Word& w);
/// A(W) = (W - (-1)^k W^dagger) / 2, so that bracket(w) + vector_part(w) = w.
RationalPolynomial vector_part(const Word& w);

template <Coefficient C>
Polynomial<C> bracket(const Polynomial<C>& p) {
  Polynomial<C> out = p + conjugate(p);
  return out *= Rational(1, 2);
}

template <Coefficient C>
Polynomial<C> vector_part(const Polynomial<C>& p) {
  Polynomial<C> out = p - conjugate(p);
  return out *= Rational(1, 2);
}

/// p x q = (pq - qp) / 2.
template <Coefficient C>
Polynomial<C> cross(const Polynomial<C>& p, const Polynomial<C>& q) {
  Polynomial<C> out = p * q - q * p;
  return out *= Rational(1, 2);
}

/// The set of variable multisets (sorted words) among the terms of p.
template <Coefficient C>
std::set<Word> multidegree(const Polynomial<C>& p) {
  std::set<Word> out;
  for (const auto& [w, c] : p.terms()) out.insert(w.multiset());
  return out;
}

}  // namespace quatnf
