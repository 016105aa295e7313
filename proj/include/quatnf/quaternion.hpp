#pragma once

#include <ostream>
#include <string>

#include "quatnf/rational.hpp"

namespace quatnf {

/// a + b*i + c*j + d*k.
template <class T>
struct Quaternion {
  T a{}, b{}, c{}, d{};

  static Quaternion identity() { return {T(1), T(0), T(0), T(0)}; }
  static Quaternion pure(T x, T y, T z) { return {T(0), std::move(x), std::move(y), std::move(z)}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_real() const { return b == 0 && c == 0 && d == 0; }
  bool is_pure() const { return a == 0; }

  Quaternion& operator+=(const Quaternion& r) {
    a += r.a; b += r.b; c += r.c; d += r.d;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& r) {
    a -= r.a; b -= r.b; c -= r.c; d -= r.d;
    return *this;
  }
  Quaternion& operator*=(const T& s) {
    a *= s; b *= s; c *= s; d *= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(Quaternion x, const T& s) { return x *= s; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
template <class T>
Quaternion<T> qmul(const Quaternion<T>& x, const Quaternion<T>& y) {
  return {T(x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d),
          T(x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c),
          T(x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b),
          T(x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a)};
}

template <class T>
Quaternion<T> operator*(const Quaternion<T>& x, const Quaternion<T>& y) {
  return qmul(x, y);
}

template <class T>
Quaternion<T> qconj(const Quaternion<T>& x) {
  return {x.a, T(-x.b), T(-x.c), T(-x.d)};
}

using RationalQuaternion = Quaternion<Rational>;

/// e.g. `(0, 1, -1/2, 3)`.
std::ostream& operator<<(std::ostream& os, const RationalQuaternion& q);
std::string to_string(const RationalQuaternion& q);

}  // namespace quatnf
