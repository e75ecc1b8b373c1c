#pragma once

// Independent reference arithmetic for tests. A value of D[w] is written as
// (p + q r2) + i (s + t r2) with rational p, q, s, t, where r2 = sqrt 2.

#include <boost/multiprecision/cpp_int.hpp>

#include "zxw/ring.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

struct QR2 {
  Q p, q;  // p + q sqrt2
  friend QR2 operator+(const QR2& x, const QR2& y) { return {x.p + y.p, x.q + y.q}; }
  friend QR2 operator-(const QR2& x, const QR2& y) { return {x.p - y.p, x.q - y.q}; }
  friend QR2 operator*(const QR2& x, const QR2& y) {
    return {x.p * y.p + 2 * x.q * y.q, x.p * y.q + x.q * y.p};
  }
  friend bool operator==(const QR2& x, const QR2& y) { return x.p == y.p && x.q == y.q; }
};

struct Complex {
  QR2 re, im;
  friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
  friend Complex operator*(const Complex& x, const Complex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const Complex& x, const Complex& y) { return x.re == y.re && x.im == y.im; }
};

inline Q to_q(const zxw::Dyadic& d) {
  return Q(d.num()) / Q(boost::multiprecision::cpp_int(1) << d.exp());
}

/// w = (1+i)/r2, w^2 = i, w^3 = (-1+i)/r2.
inline Complex embed(const zxw::Cyclotomic& x) {
  Q a = to_q(x.a()), b = to_q(x.b()), c = to_q(x.c()), d = to_q(x.d());
  return {{a, (b - d) / 2}, {c, (b + d) / 2}};
}

}  // namespace oracle
