#include "equichar/oracle/matrix_module.hpp"

#include <string>

namespace equichar::oracle {

namespace {

constexpr Int kMaxOracleOrder = 1024;

void check_dim(const ShapeContext& ctx, Int d) {
  require(d <= ctx.max_dim, ErrorKind::Validation,
          "module dimension " + std::to_string(d) + " exceeds the oracle bound " + std::to_string(ctx.max_dim));
}

// C(x, j) mod p by Lucas' theorem.
Int binomial_mod_p(Int x, Int j, Int p) {
  Int out = 1;
  while (x > 0 || j > 0) {
    const Int a = x % p, b = j % p;
    if (b > a) return 0;
    Int num = 1, den = 1;
    for (Int k = 0; k < b; ++k) {
      num = num * (a - k) % p;
      den = den * (k + 1) % p;
    }
    out = out * num % p * inverse_mod(den, p) % p;
    x /= p;
    j /= p;
  }
  return out;
}

}  // namespace

ShapeContext ShapeContext::make(const GroupShape& shape, Int max_dim) {
  GroupShape::make(shape.p, shape.n, shape.c, shape.a_chi);
  require(shape.h_order() <= kMaxOracleOrder, ErrorKind::Validation, "p^n is too large for the matrix oracle");
  require(max_dim >= 1, ErrorKind::Validation, "oracle dimension bound must be positive");
  ShapeContext ctx;
  ctx.shape = shape;
  ctx.field = std::make_shared<GaloisField>(GaloisField::build(shape.p, shape.c));
  ctx.zeta = ctx.field->root_of_unity(shape.c);
  ctx.max_dim = max_dim;
  const Elem chi = ctx.field->pow(ctx.zeta, shape.a_chi);
  require(ctx.field->in_prime_field(chi), ErrorKind::Internal, "chi(rho) does not lie in F_p");
  const Int h = shape.h_order();
  ctx.chi_lift = h == 1 ? 0 : 1;
  if (h > 1) {
    // x^{p^{n-1}} mod p^n is the Teichmueller lift.
    Int x = static_cast<Int>(chi);
    for (Int k = 0; k + 1 < shape.n; ++k) {
      Int y = 1;
      for (Int t = 0; t < shape.p; ++t) y = y * x % h;
      x = y;
    }
    ctx.chi_lift = x % h;
  }
  return ctx;
}

ShapeContext ShapeContext::sub() const {
  require(shape.n >= 1, ErrorKind::Validation, "restriction to H' needs n >= 1");
  ShapeContext out = *this;
  out.shape = shape.sub_shape();
  const Int h = out.shape.h_order();
  out.chi_lift = h == 1 ? 0 : chi_lift % h;
  return out;
}

void check_relations(const MatrixModule& m) {
  const GaloisField& F = *m.ctx.field;
  const Int d = m.dim();
  const Matrix I = Matrix::identity(d);
  if (!(pow(F, m.S, m.ctx.shape.h_order()) == I))
    fail(ErrorKind::RelationCheckFailed, "S^{p^n} != 1");
  if (!(pow(F, m.R, m.ctx.shape.c) == I)) fail(ErrorKind::RelationCheckFailed, "R^c != 1");
  if (!(mul(F, m.R, m.S) == mul(F, pow(F, m.S, m.ctx.chi_lift), m.R)))
    fail(ErrorKind::RelationCheckFailed, "R S != S^x R");
}

MatrixModule realize(const ShapeContext& ctx, Int l, Int i) {
  const GroupShape& s = ctx.shape;
  require(i >= 1 && i <= s.h_order(), ErrorKind::Validation, "length of J_i must lie in 1..p^n");
  check_dim(ctx, i);
  const GaloisField& F = *ctx.field;

  MatrixModule m{ctx, Matrix::identity(i), Matrix(i, i)};
  for (Int t = 0; t + 1 < i; ++t) m.S.at(t + 1, t) = 1;

  // u(T) = (1+T)^x - 1 mod T^i; column t of R is lambda u^t.
  std::vector<Elem> u(static_cast<std::size_t>(i), 0);
  for (Int j = 1; j < i; ++j) u[static_cast<std::size_t>(j)] = F.from_int(binomial_mod_p(ctx.chi_lift, j, s.p));
  const Elem lambda = F.pow(ctx.zeta, mod(l - (i - 1) * s.a_chi, s.c));
  std::vector<Elem> power(static_cast<std::size_t>(i), 0);
  power[0] = 1;
  for (Int t = 0; t < i; ++t) {
    for (Int r = 0; r < i; ++r) m.R.at(r, t) = F.mul(lambda, power[static_cast<std::size_t>(r)]);
    std::vector<Elem> next(static_cast<std::size_t>(i), 0);
    for (Int a = 0; a < i; ++a) {
      if (power[static_cast<std::size_t>(a)] == 0) continue;
      for (Int b = 1; a + b < i; ++b) {
        auto& slot = next[static_cast<std::size_t>(a + b)];
        slot = F.add(slot, F.mul(power[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)]));
      }
    }
    power = std::move(next);
  }
  check_relations(m);
  return m;
}

MatrixModule regular(const ShapeContext& ctx) {
  const Int h = ctx.shape.h_order();
  const Int c = ctx.shape.c;
  const Int d = checked_mul(h, c);
  check_dim(ctx, d);
  MatrixModule m{ctx, Matrix(d, d), Matrix(d, d)};
  auto idx = [h](Int j, Int k) { return k * h + j; };
  for (Int j = 0; j < h; ++j)
    for (Int k = 0; k < c; ++k) {
      // sigma . sigma^j rho^k = sigma^{j+1} rho^k;  rho . sigma^j rho^k = sigma^{jx} rho^{k+1}
      m.S.at(idx((j + 1) % h, k), idx(j, k)) = 1;
      m.R.at(idx(j * ctx.chi_lift % h, (k + 1) % c), idx(j, k)) = 1;
    }
  check_relations(m);
  return m;
}

MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b) {
  require(a.ctx.shape == b.ctx.shape, ErrorKind::Validation, "direct sum of modules over different groups");
  check_dim(a.ctx, a.dim() + b.dim());
  return {a.ctx, block_diag(a.S, b.S), block_diag(a.R, b.R)};
}

MatrixModule conjugate(const MatrixModule& m, const Matrix& a) {
  const GaloisField& F = *m.ctx.field;
  const Matrix a_inv = inverse(F, a);
  return {m.ctx, mul(F, mul(F, a, m.S), a_inv), mul(F, mul(F, a, m.R), a_inv)};
}

MatrixModule restrict_to_Hprime(const MatrixModule& m) {
  return {m.ctx.sub(), pow(*m.ctx.field, m.S, m.ctx.shape.p), m.R};
}

MatrixModule submodule(const MatrixModule& m, const Matrix& basis) {
  const GaloisField& F = *m.ctx.field;
  return {m.ctx, solve(F, basis, mul(F, m.S, basis)), solve(F, basis, mul(F, m.R, basis))};
}

Matrix socle_filtration_step(const MatrixModule& m, Int j) {
  const GaloisField& F = *m.ctx.field;
  return kernel(F, pow(F, shift(F, m.S, 1), j));
}

std::vector<VirtualCModule> t_char_decomp(const MatrixModule& m) {
  const GaloisField& F = *m.ctx.field;
  const GroupShape& s = m.ctx.shape;
  const Int h = s.h_order();
  const Matrix N = shift(F, m.S, 1);

  std::vector<std::vector<Int>> layers(static_cast<std::size_t>(h), std::vector<Int>(static_cast<std::size_t>(s.c), 0));
  Int total = 0;
  for (Int l = 0; l < s.c; ++l) {
    Matrix B = kernel(F, shift(F, m.R, F.pow(m.ctx.zeta, l)));
    total += B.cols();
    // dim (ker N^j cap E_l) = dim E_l - rank N^j|E_l
    Int prev = B.cols();
    for (Int j = 1; j <= h && prev > 0; ++j) {
      B = column_basis(F, mul(F, N, B));
      layers[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l)] = prev - B.cols();
      prev = B.cols();
    }
    if (prev > 0) fail(ErrorKind::RelationCheckFailed, "S - 1 is not nilpotent of order <= p^n");
  }
  if (total != m.dim())
    fail(ErrorKind::RelationCheckFailed, "R is not diagonalizable over the c-th roots of unity");

  std::vector<VirtualCModule> out;
  out.reserve(layers.size());
  for (auto& layer : layers) out.emplace_back(s.c, std::move(layer));
  return out;
}

GModuleDecomp decompose(const MatrixModule& m) { return from_t_data(m.ctx.shape, t_char_decomp(m)); }

}  // namespace equichar::oracle
