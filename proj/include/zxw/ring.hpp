#pragma once

// Exact scalars: dyadic rationals D = Z[1/2] and the ring D[w] with w = e^{i pi/4}.

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zxw {

using BigInt = boost::multiprecision::cpp_int;

/// A dyadic rational num / 2^exp kept in normal form: num is odd, or exp == 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt num, unsigned exp);

  const BigInt& num() const { return num_; }
  unsigned exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y);
  Dyadic& operator+=(const Dyadic& y) { return *this = *this + y; }
  Dyadic& operator-=(const Dyadic& y) { return *this = *this - y; }
  Dyadic& operator*=(const Dyadic& y) { return *this = *this * y; }
  friend bool operator==(const Dyadic& x, const Dyadic& y) {
    return x.exp_ == y.exp_ && x.num_ == y.num_;
  }

  /// Multiplies by 2^-k.
  Dyadic halved(unsigned k = 1) const { return Dyadic(num_, exp_ + k); }

  /// "p" or "p/2^q" rendered as "p/q'" with q' = 2^q.
  std::string to_string() const;
  double to_double() const;

 private:
  BigInt num_ = 0;
  unsigned exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

/// a + b w + c w^2 + d w^3 with w^4 = -1. Coefficients share a common
/// power-of-two denominator internally; the representation is canonical.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long long v) : num_{BigInt(v), 0, 0, 0} {}  // NOLINT
  Cyclotomic(const Dyadic& v);                          // NOLINT
  Cyclotomic(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d);

  /// w^k, k taken mod 8.
  static Cyclotomic root_power(long long k);
  static Cyclotomic sqrt2();
  static Cyclotomic inv_sqrt2();

  /// Coefficient of w^i, i in [0, 4).
  Dyadic coeff(int i) const { return Dyadic(num_[i], exp_); }
  Dyadic a() const { return coeff(0); }
  Dyadic b() const { return coeff(1); }
  Dyadic c() const { return coeff(2); }
  Dyadic d() const { return coeff(3); }

  bool is_zero() const;
  bool is_dyadic() const { return num_[1] == 0 && num_[2] == 0 && num_[3] == 0; }
  unsigned denominator_exp() const { return exp_; }
  const BigInt& raw_num(int i) const { return num_[i]; }

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  Cyclotomic& operator+=(const Cyclotomic& y);
  Cyclotomic& operator-=(const Cyclotomic& y) { return *this = *this - y; }
  Cyclotomic& operator*=(const Cyclotomic& y) { return *this = *this * y; }
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    return x.exp_ == y.exp_ && x.num_ == y.num_;
  }

  Cyclotomic halved(unsigned k = 1) const;
  /// Complex conjugate: (a, b, c, d) -> (a, -d, -c, -b).
  Cyclotomic conj() const;

  /// Human-readable "a + b*w + c*w^2 + d*w^3", zero terms omitted.
  std::string to_string() const;

 private:
  void normalize();
  std::array<BigInt, 4> num_{};
  unsigned exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
inline Cyclotomic from_phase(long long k) { return Cyclotomic::root_power(k); }

/// Image of x under the automorphism w -> w^k (k odd).
Cyclotomic galois(const Cyclotomic& x, int k);
/// q with a = q * b when such q exists in D[w]; false otherwise (and for b = 0).
bool exact_quotient(const Cyclotomic& a, const Cyclotomic& b, Cyclotomic& q);

/// 4x4 dyadic block; rows and columns indexed 0..3.
using Dyadic4x4 = std::array<std::array<Dyadic, 4>, 4>;

/// The companion-style matrix M of X^4 + 1 (rows (0,1,0,0), (0,0,1,0),
/// (0,0,0,1), (-1,0,0,0)); M^4 = -I.
const Dyadic4x4& companion_matrix();

/// Multiplication-by-x as a 4x4 dyadic matrix: a I + b M + c M^2 + d M^3.
Dyadic4x4 psi_scalar(const Cyclotomic& x);

/// Reduces a phase to [0, 8).
inline int mod8(long long k) { return static_cast<int>(((k % 8) + 8) % 8); }

}  // namespace zxw
