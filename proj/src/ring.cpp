#include "zxw/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace zxw {

namespace {

unsigned trailing_zeros(const BigInt& v) {
  BigInt m = abs(v);
  return static_cast<unsigned>(boost::multiprecision::lsb(m));
}

}  // namespace

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  unsigned tz = trailing_zeros(num_);
  unsigned k = tz < exp_ ? tz : exp_;
  if (k > 0) {
    num_ >>= k;
    exp_ -= k;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  if (x.exp_ == y.exp_) return Dyadic(x.num_ + y.num_, x.exp_);
  if (x.exp_ < y.exp_) return Dyadic((x.num_ << (y.exp_ - x.exp_)) + y.num_, y.exp_);
  return Dyadic(x.num_ + (y.num_ << (x.exp_ - y.exp_)), x.exp_);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }

Dyadic operator*(const Dyadic& x, const Dyadic& y) {
  return Dyadic(x.num_ * y.num_, x.exp_ + y.exp_);
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  os << num_;
  if (exp_ > 0) os << '/' << (BigInt(1) << exp_);
  return os.str();
}

double Dyadic::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(BigInt(1) << exp_);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

// ------------------------------------------------------------ Cyclotomic

Cyclotomic::Cyclotomic(const Dyadic& v) : num_{v.num(), 0, 0, 0}, exp_(v.exp()) {}

Cyclotomic::Cyclotomic(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d) {
  std::array<const Dyadic*, 4> in{&a, &b, &c, &d};
  unsigned e = 0;
  for (auto* p : in) e = std::max(e, p->exp());
  for (int i = 0; i < 4; ++i) num_[i] = in[i]->num() << (e - in[i]->exp());
  exp_ = e;
  normalize();
}

void Cyclotomic::normalize() {
  if (exp_ == 0) return;
  unsigned k = exp_;
  bool any = false;
  for (const auto& n : num_) {
    if (n == 0) continue;
    any = true;
    k = std::min(k, trailing_zeros(n));
    if (k == 0) return;
  }
  if (!any) {
    exp_ = 0;
    return;
  }
  for (auto& n : num_) n >>= k;
  exp_ -= k;
}

Cyclotomic Cyclotomic::root_power(long long k) {
  int r = mod8(k);
  Cyclotomic x;
  x.num_[r % 4] = r < 4 ? 1 : -1;
  return x;
}

Cyclotomic Cyclotomic::sqrt2() { return Cyclotomic(0, 1, 0, -1); }

Cyclotomic Cyclotomic::inv_sqrt2() { return sqrt2().halved(); }

bool Cyclotomic::is_zero() const {
  return num_[0] == 0 && num_[1] == 0 && num_[2] == 0 && num_[3] == 0;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& n : r.num_) n = -n;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& y) {
  if (y.is_zero()) return *this;
  if (exp_ < y.exp_) {
    for (auto& n : num_) n <<= (y.exp_ - exp_);
    exp_ = y.exp_;
  }
  unsigned shift = exp_ - y.exp_;
  for (int i = 0; i < 4; ++i) num_[i] += shift ? (y.num_[i] << shift) : y.num_[i];
  normalize();
  return *this;
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  Cyclotomic r = x;
  r += y;
  return r;
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  Cyclotomic r;
  if (x.is_zero() || y.is_zero()) return r;
  for (int i = 0; i < 4; ++i) {
    if (x.num_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (y.num_[j] == 0) continue;
      int k = i + j;
      if (k < 4)
        r.num_[k] += x.num_[i] * y.num_[j];
      else
        r.num_[k - 4] -= x.num_[i] * y.num_[j];
    }
  }
  r.exp_ = x.exp_ + y.exp_;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::halved(unsigned k) const {
  Cyclotomic r = *this;
  if (r.is_zero()) return r;
  r.exp_ += k;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r;
  r.num_ = {num_[0], -num_[3], -num_[2], -num_[1]};
  r.exp_ = exp_;
  return r;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  static const char* basis[4] = {"", "w", "w^2", "w^3"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    Dyadic c = coeff(i);
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool neg = s[0] == '-';
    if (neg) s = s.substr(1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0)
      os << s;
    else if (s == "1")
      os << basis[i];
    else
      os << s << '*' << basis[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

// --------------------------------------------------------------------- psi

Cyclotomic galois(const Cyclotomic& x, int k) {
  if (k % 2 == 0) throw std::invalid_argument("galois: k must be odd");
  Cyclotomic r;
  for (int i = 0; i < 4; ++i) r += Cyclotomic(x.coeff(i)) * Cyclotomic::root_power(static_cast<long long>(i) * k);
  return r;
}

bool exact_quotient(const Cyclotomic& a, const Cyclotomic& b, Cyclotomic& q) {
  if (b.is_zero()) return false;
  // a / b = a * (product of the other conjugates of b) / N(b), N(b) dyadic.
  Cyclotomic rest = galois(b, 3) * galois(b, 5) * galois(b, 7);
  Cyclotomic top = a * rest;
  Cyclotomic norm = b * rest;
  if (!norm.is_dyadic()) throw std::logic_error("norm is not rational");
  const Dyadic n = norm.a();
  BigInt odd = n.num();
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  Dyadic c[4];
  for (int i = 0; i < 4; ++i) {
    const Dyadic t = top.coeff(i);
    if (t.num() % odd != 0) return false;
    // t / (odd * 2^twos / 2^n.exp())
    c[i] = Dyadic(t.num() / odd, t.exp()) * Dyadic(BigInt(1) << n.exp(), 0);
    c[i] = c[i] * Dyadic(BigInt(1), twos);
  }
  q = Cyclotomic(c[0], c[1], c[2], c[3]);
  return true;
}

const Dyadic4x4& companion_matrix() {
  static const Dyadic4x4 m = [] {
    Dyadic4x4 r{};
    r[0][1] = 1;
    r[1][2] = 1;
    r[2][3] = 1;
    r[3][0] = -1;
    return r;
  }();
  return m;
}

Dyadic4x4 psi_scalar(const Cyclotomic& x) {
  // Row r of M^k has a single entry: column r + k, negated when it wraps.
  Dyadic4x4 out{};
  for (int k = 0; k < 4; ++k) {
    Dyadic c = x.coeff(k);
    if (c.is_zero()) continue;
    for (int r = 0; r < 4; ++r) {
      int col = r + k;
      if (col < 4)
        out[r][col] += c;
      else
        out[r][col - 4] -= c;
    }
  }
  return out;
}

}  // namespace zxw
