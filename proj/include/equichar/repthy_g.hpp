#pragma once

// Modules over k[G] for G = Z/p^n x|_chi Z/c. Indecomposables are the
// uniserial modules J_i(psi^l) of length i (1 <= i <= p^n) with socle psi^l,
// and a module is recorded by its multiset of (l, i).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equichar/repthy_c.hpp"

namespace equichar {

struct GroupShape {
  Int p = 2;
  Int n = 0;
  Int c = 1;
  Int a_chi = 0;  // chi = psi^{a_chi}

  /// Validates: p prime, n >= 0, c >= 1, gcd(p, c) = 1, (p-1) a_chi = 0 mod c,
  /// p^n <= 2^40. Throws Validation.
  static GroupShape make(Int p, Int n, Int c = 1, Int a_chi = 0);

  /// Order of the p-Sylow subgroup H.
  Int h_order() const { return checked_pow(p, static_cast<unsigned>(n)); }
  CharExponent chi() const { return {a_chi, c}; }
  /// Shape of H' x| C with H' the index-p subgroup of H.
  GroupShape sub_shape() const;

  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

/// Key (socle character exponent l, length i).
using IndecKey = std::pair<Int, Int>;

class GModuleDecomp {
 public:
  explicit GModuleDecomp(GroupShape shape) : shape_(shape) {}

  /// J_i(psi^l)^{+k}.
  static GModuleDecomp indecomposable(const GroupShape& shape, Int l, Int i, Int k = 1);
  /// J_i(V) for an actual k[C]-module V.
  static GModuleDecomp jordan(const GroupShape& shape, Int i, const VirtualCModule& v);

  const GroupShape& shape() const { return shape_; }
  /// Nonzero multiplicities only, ordered by (l, i).
  const std::map<IndecKey, Int>& mult() const { return mult_; }
  Int multiplicity(Int l, Int i) const;

  /// Adds k >= 0 copies of J_i(psi^l).
  void add(Int l, Int i, Int k);

  bool is_zero() const { return mult_.empty(); }
  /// Number of indecomposable summands.
  Int summands() const;

  /// "J_3(ψ^1)^⊕2 ⊕ J_2(ψ^0)", longest blocks first; "J_i" when c = 1.
  std::string str(bool pretty = true) const;

  friend bool operator==(const GModuleDecomp&, const GModuleDecomp&) = default;

 private:
  GroupShape shape_;
  std::map<IndecKey, Int> mult_;
};

GModuleDecomp operator+(const GModuleDecomp& a, const GModuleDecomp& b);

/// Signed accumulator for formulas that pass through virtual modules.
class VirtualGModule {
 public:
  explicit VirtualGModule(GroupShape shape) : shape_(shape) {}

  void add(Int l, Int i, Int k);
  void add_jordan(Int i, const VirtualCModule& v);

  /// Throws NegativeMultiplicity if any coefficient is negative.
  GModuleDecomp materialize(const std::string& context = {}) const;

 private:
  GroupShape shape_;
  std::map<IndecKey, Int> mult_;
};

Int dim(const GModuleDecomp& m);

/// T^j M = M^{(j)} / M^{(j-1)} as a k[C]-module, 1 <= j <= p^n.
VirtualCModule t_functor(const GModuleDecomp& m, Int j);
/// [T^1 M, ..., T^{p^n} M].
std::vector<VirtualCModule> t_data(const GModuleDecomp& m);

/// Inverse of t_data. Throws InconsistentTData when no module has these layers.
GModuleDecomp from_t_data(const GroupShape& shape, const std::vector<VirtualCModule>& t);

VirtualCModule restrict_to_C(const GModuleDecomp& m);
/// Restriction to H' x| C, H' = <sigma^p>. Requires n >= 1.
GModuleDecomp restrict_to_Hprime(const GModuleDecomp& m);
/// Restriction to H alone (c = 1).
GModuleDecomp forget_C(const GModuleDecomp& m);

}  // namespace equichar
