#include "equichar/arith.hpp"

#include <sstream>

namespace equichar {

Int checked_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp-- > 0) r = checked_mul(r, base);
  return r;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned valuation(Int n, Int p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int extended_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = floor_div(old_r, r);
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Int inverse_mod(Int a, Int m) {
  if (m == 1) return 0;
  Int x, y;
  Int g = extended_gcd(mod(a, m), m, x, y);
  require(g == 1, ErrorKind::Validation,
          std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return mod(x, m);
}

Rational::Rational(Int n, Int d) {
  require(d != 0, ErrorKind::Internal, "rational with zero denominator");
  if (d < 0) {
    n = checked_sub(0, n);
    d = checked_sub(0, d);
  }
  Int g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  Int g = std::gcd(a.den_, b.den_);
  Int l = checked_mul(a.den_ / g, b.den_);
  return Rational(checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = std::gcd(a.num_, b.den_);
  Int g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

bool operator<(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

}  // namespace equichar
