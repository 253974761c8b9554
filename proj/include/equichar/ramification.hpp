#pragma once

// Ramification data of Z/p^n-covers X -> Y and of Z/p x| Z/c-covers
// X -> Y -> Z = Y/C. Points are abstract list entries; only their invariants
// enter the formulas.

#include <optional>
#include <vector>

#include "equichar/arith.hpp"
#include "equichar/repthy_g.hpp"

namespace equichar {

/// A wildly ramified point with inertia of order p^m, stored through the
/// integers i^(0), ..., i^(m-1) that produce both jump sequences:
///   u^(t) = i^(0) + ... + i^(t-1),   l^(t) = i^(0) + i^(1) p + ... + i^(t-1) p^(t-1).
struct WildBranchPoint {
  std::vector<Int> i_seq;

  Int m() const { return static_cast<Int>(i_seq.size()); }

  /// Requires m >= 1, i^(0) >= 1, p does not divide i^(0), i^(t) >= 0.
  void validate(Int p) const;

  static WildBranchPoint from_upper(const std::vector<Int>& upper);
  /// Throws InvalidJump if the differences are not divisible by p^t.
  static WildBranchPoint from_lower(const std::vector<Int>& lower, Int p);

  friend bool operator==(const WildBranchPoint&, const WildBranchPoint&) = default;
};

struct Jumps {
  std::vector<Int> upper;  // u^(1), ..., u^(m)
  std::vector<Int> lower;  // l^(1), ..., l^(m)
};

Jumps jumps(const WildBranchPoint& pt, Int p);
/// The last upper jump u = u^(m).
Int last_jump(const WildBranchPoint& pt);

/// Exponent of the different at a point over Q: sum over i >= 0 of (#G_i - 1).
Int different_exponent(const WildBranchPoint& pt, Int p);

struct CyclicCoverData {
  Int p = 2;
  Int n = 0;
  Int genus_base = 0;  // g_Y
  std::vector<WildBranchPoint> points;

  void validate() const;
  GroupShape shape() const { return GroupShape::make(p, n); }
  /// m_{X/Y}: the largest m over branch points, 0 when etale.
  Int max_m() const;
  bool is_etale() const { return points.empty(); }
};

/// Genus of X from Riemann-Hurwitz. Throws InvalidCover when it is not a
/// nonnegative integer.
Int genus_top(const CyclicCoverData& data);

/// X'' = X / <sigma^{p^{n-1}}> as a Z/p^{n-1}-cover of Y.
CyclicCoverData derive_quotient_cover(const CyclicCoverData& data);

struct SubcoverData {
  CyclicCoverData cover;            // X -> Y' = X/H' as a Z/p^{n-1}-cover
  std::vector<Int> quotient_jumps;  // l^(1) of Y' -> Y at each of its branch points
};

/// X over Y' = X/H', together with the branch data of the Z/p-cover Y' -> Y.
SubcoverData derive_subcover(const CyclicCoverData& data);

/// Tame branch point of Y -> Z = Y/C: stabilizer of order e, fundamental
/// character theta = psi^{theta_exp} restricted to the stabilizer.
struct TameBranchPoint {
  Int e = 1;
  Int theta_exp = 1;

  friend bool operator==(const TameBranchPoint&, const TameBranchPoint&) = default;
};

/// One C-orbit of wild branch points of X -> Y, identified by its image in Z.
struct WildOrbit {
  std::optional<std::size_t> anchor;  // index into tame, or nullopt for a point unramified in Y -> Z
  Int u = 1;                          // the (only) jump of the Z/p-cover there

  friend bool operator==(const WildOrbit&, const WildOrbit&) = default;
};

struct SemidirectCoverData {
  GroupShape shape;  // n = 1
  Int genus_base = 0;  // g_Z
  std::vector<TameBranchPoint> tame;
  std::vector<WildOrbit> wild;

  void validate() const;
  /// Number of points of Y in the k-th wild orbit.
  Int orbit_size(std::size_t k) const;
};

/// Coefficient ceil(u/p) of D at each wild orbit.
std::vector<Int> divisor_D(const SemidirectCoverData& data);
/// Coefficient floor((u+1)(p-1)/p) of R' at each wild orbit.
std::vector<Int> divisor_Rprime(const SemidirectCoverData& data);

/// Genus of Y from the tame Riemann-Hurwitz formula for Y -> Z.
Int genus_Y(const SemidirectCoverData& data);

/// X -> Y with C forgotten: the Z/p-cover with every wild orbit expanded.
CyclicCoverData cyclic_part(const SemidirectCoverData& data);

}  // namespace equichar
