#pragma once

// Overflow-checked integer helpers and a small exact rational type.
// Everything in the library is integral or rational; there are no floats.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "equichar/error.hpp"

namespace equichar {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

/// Floor division with a positive divisor.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Least nonnegative residue of a modulo m (m > 0).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int checked_pow(Int base, unsigned exp);

bool is_prime(Int n);

/// p-adic valuation of n (n != 0).
unsigned valuation(Int n, Int p);

/// Inverse of a modulo m; throws Validation if gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);

/// Solves x*a + y*b = gcd(a, b); returns gcd.
Int extended_gcd(Int a, Int b, Int& x, Int& y);

/// Exact rational number with a positive, reduced denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Int n) : num_(n) {}  // NOLINT: implicit from integer is intended
  Rational(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Int floor() const { return floor_div(num_, den_); }
  /// Fractional part <x> = x - floor(x), in [0, 1).
  Rational frac() const { return Rational(mod(num_, den_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(checked_sub(0, a.num_), a.den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace equichar
