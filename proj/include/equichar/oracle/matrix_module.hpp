#pragma once

// Explicit representations of G = Z/p^n x|_chi Z/c over F_q: sigma acts by S,
// rho by R, with S^{p^n} = 1, R^c = 1 and R S R^{-1} = S^x, where x is the
// Teichmueller lift to (Z/p^n)^x of chi(rho) in F_p^x. Characters are
// psi^l(rho) = zeta^l for a fixed primitive c-th root of unity zeta.

#include <memory>
#include <vector>

#include "equichar/oracle/galois_field.hpp"
#include "equichar/oracle/matrix.hpp"
#include "equichar/repthy_g.hpp"

namespace equichar::oracle {

constexpr Int kDefaultMaxDim = 512;

struct ShapeContext {
  GroupShape shape;
  std::shared_ptr<const GaloisField> field;
  Elem zeta = 1;
  Int chi_lift = 1;  // x in (Z/p^n)^x
  Int max_dim = kDefaultMaxDim;

  /// Requires p^n <= 1024.
  static ShapeContext make(const GroupShape& shape, Int max_dim = kDefaultMaxDim);
  /// The same field and characters for H' x| C.
  ShapeContext sub() const;
};

struct MatrixModule {
  ShapeContext ctx;
  Matrix S;
  Matrix R;

  Int dim() const { return S.rows(); }
};

/// Throws RelationCheckFailed naming the first relation that fails.
void check_relations(const MatrixModule& m);

/// J_i(psi^l) on k[T]/(T^i): sigma is multiplication by 1 + T, rho is
/// f(T) -> lambda f((1+T)^x - 1) with lambda = zeta^{l - (i-1) a_chi}.
MatrixModule realize(const ShapeContext& ctx, Int l, Int i);
/// k[G] acting on itself by left multiplication, basis sigma^j rho^k.
MatrixModule regular(const ShapeContext& ctx);
MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b);
/// A M A^{-1}.
MatrixModule conjugate(const MatrixModule& m, const Matrix& a);
/// The same space with sigma^p acting as the generator of H'.
MatrixModule restrict_to_Hprime(const MatrixModule& m);
/// The submodule spanned by the columns of `basis` (must be G-stable and of
/// full column rank).
MatrixModule submodule(const MatrixModule& m, const Matrix& basis);
/// ker (sigma - 1)^j as a column basis.
Matrix socle_filtration_step(const MatrixModule& m, Int j);

/// [T^1 M, ..., T^{p^n} M] by linear algebra: eigenspaces of R, then ranks of
/// (S - 1)^j on each. Throws RelationCheckFailed if R is not diagonalizable
/// with c-th roots of unity or S - 1 is not nilpotent of order <= p^n.
std::vector<VirtualCModule> t_char_decomp(const MatrixModule& m);

GModuleDecomp decompose(const MatrixModule& m);

}  // namespace equichar::oracle
