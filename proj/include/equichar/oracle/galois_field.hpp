#pragma once

// F_q, q = p^r, with elements coded as integers 0..q-1 whose base-p digits
// are the coefficients of a polynomial reduced modulo a fixed irreducible.
// Multiplication goes through exp/log tables of the smallest primitive element.

#include <cstdint>
#include <string>
#include <vector>

#include "equichar/arith.hpp"

namespace equichar::oracle {

using Elem = std::uint32_t;

class GaloisField {
 public:
  /// Smallest r with c | p^r - 1, lexicographically smallest monic
  /// irreducible modulus of degree r. Requires q <= 2^16.
  static GaloisField build(Int p, Int c);
  static GaloisField of_degree(Int p, Int r);

  Int p() const { return p_; }
  Int r() const { return r_; }
  Int q() const { return q_; }
  /// Coefficients a_0..a_{r-1} of the monic modulus x^r + a_{r-1}x^{r-1} + ... + a_0.
  const std::vector<Int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    if (r_ == 1) return static_cast<Elem>((a + b) % static_cast<Elem>(p_));
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    Int s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[static_cast<std::size_t>(s)];
  }
  Elem inv(Elem a) const;
  bool is_prime_field() const { return r_ == 1; }
  /// Row a of the multiplication table (q <= 256 only, else nullptr).
  const Elem* mul_row(Elem a) const {
    return mul_table_.empty() ? nullptr : mul_table_.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(q_);
  }
  Elem pow(Elem a, Int e) const;

  /// The primitive element used for the tables.
  Elem generator() const { return exp_[q_ > 2 ? 1 : 0]; }
  /// generator^((q-1)/c); requires c | q - 1.
  Elem root_of_unity(Int c) const;
  Elem from_int(Int v) const { return static_cast<Elem>(mod(v, p_)); }
  bool in_prime_field(Elem a) const { return static_cast<Int>(a) < p_; }

  std::string str(Elem a) const;

 private:
  GaloisField() = default;
  Elem add_digits(Elem a, Elem b) const;

  Int p_ = 2, r_ = 1, q_ = 2;
  std::vector<Int> modulus_;
  std::vector<Elem> exp_;
  std::vector<Int> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
};

}  // namespace equichar::oracle
