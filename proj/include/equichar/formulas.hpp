#pragma once

#include <optional>
#include <vector>

#include "equichar/arith.hpp"
#include "equichar/ramification.hpp"
#include "equichar/repthy_c.hpp"
#include "equichar/repthy_g.hpp"

namespace equichar {

/// A tame C-cover Y -> Z with an effective C-equivariant divisor on Y, given
/// by its coefficient over each tame branch point plus any number of orbits
/// over points of Z where Y -> Z is unramified.
struct TameCoverInput {
  Int c = 1;
  Int genus_base = 0;  // genus of the quotient
  std::vector<TameBranchPoint> points;
  std::vector<Int> coeffs;       // one per point, >= 0
  std::vector<Int> free_coeffs;  // unramified orbits, >= 0

  void validate() const;
  bool divisor_is_zero() const;
};

/// Character multiplicities of H^0(Y, Omega_Y(D)) as a k[C]-module
/// (Chevalley-Weil). Evaluated exactly over the common denominator c.
/// Throws InvalidCover if a multiplicity is negative or non-integral.
VirtualCModule chevalley_weil(const TameCoverInput& inp);

/// H^1_dR(X) of a Z/p^n-cover as a k[Z/p^n]-module. `q0` selects the
/// distinguished point (must attain the maximal m); the default is the first
/// such point and the answer does not depend on the choice.
GModuleDecomp cyclic_hdr(const CyclicCoverData& data, std::optional<std::size_t> q0 = std::nullopt);

struct SemidirectResult {
  Int genus_Y = 0;
  VirtualCModule h0_omega{1};          // H^0(Y, Omega_Y)
  VirtualCModule h0_omega_D{1};        // H^0(Y, Omega_Y(D))
  VirtualCModule h0_omega_Rprime{1};   // H^0(Y, Omega_Y(R'))
  VirtualCModule h1_O{1};              // H^1(Y, O_Y)
  VirtualCModule h1_O_minus_D{1};      // H^1(Y, O_Y(-D))
  VirtualCModule v1{1};
  VirtualCModule v2{1};
  GModuleDecomp result{GroupShape{}};  // J_p(V1) + J_{p-1}(V2)
};

/// H^1_dR(X) for G = Z/p x| Z/c with X -> Y = X/(Z/p) not etale.
/// Throws EtaleUnsupported for etale data and InvalidCover when the
/// assembled V1 or V2 is not an actual module.
SemidirectResult semidirect_hdr(const SemidirectCoverData& data);

/// Ramification data of the superelliptic curve y^m = prod_{v in V}(x - v),
/// dim_{F_p} V = n, with G = F_p x| Z/(m(p-1)) acting.
SemidirectCoverData superelliptic_data(Int p, Int m, Int n);

struct SuperellipticClosedForm {
  Int c1 = 0, c2 = 0, c3 = 0;  // c2 p^{n-1} - c1 m = 1, c3 = (c2 - m c1)^{-1} mod m(p-1)
  std::vector<Rational> delta;
  std::vector<Int> alpha, beta, gamma;
  VirtualCModule v1{1};
  VirtualCModule v2{1};
  GModuleDecomp result{GroupShape{}};
};

/// Closed-form evaluation for the superelliptic family. `bezout_shift` moves
/// (c1, c2) to (c1 + p^{n-1} t, c2 + m t); the result must not change.
SuperellipticClosedForm superelliptic_closed_form(Int p, Int m, Int n, Int bezout_shift = 0);

}  // namespace equichar
