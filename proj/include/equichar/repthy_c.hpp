#pragma once

// Virtual modules over k[C], C = Z/c cyclic of order prime to p, k
// algebraically closed. Such a module is a multiplicity vector over the
// characters psi^0, ..., psi^{c-1}.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "equichar/arith.hpp"

namespace equichar {

/// Exponent l of the character psi^l, reduced modulo c.
class CharExponent {
 public:
  CharExponent(Int value, Int modulus);

  Int value() const { return value_; }
  Int modulus() const { return modulus_; }

  CharExponent operator+(Int k) const { return {value_ + k, modulus_}; }
  CharExponent operator-() const { return {-value_, modulus_}; }

  friend bool operator==(const CharExponent&, const CharExponent&) = default;

 private:
  Int value_;
  Int modulus_;
};

class VirtualCModule {
 public:
  /// The zero module over Z/c.
  explicit VirtualCModule(Int c);
  VirtualCModule(Int c, std::vector<Int> mult);

  /// psi^l with multiplicity k.
  static VirtualCModule character(Int c, Int l, Int k = 1);
  /// The trivial module k.
  static VirtualCModule trivial(Int c) { return character(c, 0); }

  Int modulus() const { return static_cast<Int>(mult_.size()); }
  const std::vector<Int>& mult() const { return mult_; }
  Int operator[](Int l) const { return mult_[static_cast<std::size_t>(mod(l, modulus()))]; }

  /// Sum of multiplicities; every character is one-dimensional.
  Int dim() const;
  bool is_actual() const;
  bool is_zero() const;

  friend bool operator==(const VirtualCModule&, const VirtualCModule&) = default;

  /// Renders as e.g. "(psi^1)^2 + psi^3" (ASCII) or with unicode when pretty.
  std::string str(bool pretty = false) const;

 private:
  std::vector<Int> mult_;
};

/// M^{psi^j}: result[l] = M[l - j].
VirtualCModule twist(const VirtualCModule& m, const CharExponent& j);
VirtualCModule twist(const VirtualCModule& m, Int j);
/// M^vee: result[l] = M[-l].
VirtualCModule dual(const VirtualCModule& m);
VirtualCModule add(const VirtualCModule& a, const VirtualCModule& b);
/// The formal difference; may go negative.
VirtualCModule sub(const VirtualCModule& a, const VirtualCModule& b);
VirtualCModule scale(const VirtualCModule& m, Int k);

inline VirtualCModule operator+(const VirtualCModule& a, const VirtualCModule& b) { return add(a, b); }
inline VirtualCModule operator-(const VirtualCModule& a, const VirtualCModule& b) { return sub(a, b); }

/// Returns m unchanged if every multiplicity is nonnegative, otherwise
/// throws NegativeMultiplicity naming the first offending character.
const VirtualCModule& materialize(const VirtualCModule& m, const std::string& context = {});

/// M + M^chi + ... + M^{chi^{p-1}} with chi = psi^{a_chi}.
VirtualCModule orbit_sum(const VirtualCModule& m, const CharExponent& a_chi, Int p);

/// Recovers M from N = M + M^chi + ... + M^{chi^{p-1}} via
///   M^{+p} = N^{+(p-1)} - N^chi - N^{chi^2} - ... - N^{chi^{p-2}}.
/// Throws NotAnOrbitSum when N has no such form.
VirtualCModule recover_orbit_factor(const VirtualCModule& n, const CharExponent& a_chi, Int p);

}  // namespace equichar
