#pragma once

#include <string>

#include "quatnf/polynomial.hpp"

namespace quatnf {

/// Letters of the quaternionic-variable alphabet: q_i is encoded as 2i and
/// its conjugate as 2i+1, so q1 < q1' < q2 < q2' < ... in word order.
namespace qletter {
inline Letter q(int i) { return static_cast<Letter>(2 * i); }
inline Letter qbar(int i) { return static_cast<Letter>(2 * i + 1); }
inline int index(Letter l) { return l / 2; }
inline bool is_bar(Letter l) { return (l & 1) != 0; }
inline Letter bar(Letter l) { return static_cast<Letter>(l ^ 1); }
}  // namespace qletter

/// Polynomial over the q / q' alphabet with rational coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(RationalPolynomial body) : body_(std::move(body)) {}
  explicit QPolynomial(const Rational& constant) : body_(constant) {}

  static QPolynomial q(int i);
  static QPolynomial qbar(int i);
  /// `conjugated` selects q_i' instead of q_i.
  static QPolynomial p(int i, bool conjugated) { return conjugated ? qbar(i) : q(i); }

  const RationalPolynomial& body() const noexcept { return body_; }
  bool is_zero() const noexcept { return body_.is_zero(); }
  std::size_t degree() const noexcept { return body_.degree(); }
  /// Largest variable index i among the q_i / q_i'.
  int max_index() const noexcept { return qletter::index(body_.max_letter()); }

  QPolynomial& operator+=(const QPolynomial& r) { body_ += r.body_; return *this; }
  QPolynomial& operator-=(const QPolynomial& r) { body_ -= r.body_; return *this; }
  QPolynomial& operator*=(const Rational& r) { body_ *= r; return *this; }

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator-(QPolynomial a) { return a *= Rational(-1); }
  friend QPolynomial operator*(QPolynomial a, const Rational& r) { return a *= r; }
  friend QPolynomial operator*(const Rational& r, QPolynomial a) { return a *= r; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    return QPolynomial(a.body_ * b.body_);
  }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  RationalPolynomial body_;
};

std::string q_letter_name(Letter l);

/// e.g. `q1*q1' - q1'*q1`.
std::string to_string(const QPolynomial& p);

}  // namespace quatnf
