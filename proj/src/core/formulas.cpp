#include "equichar/formulas.hpp"

#include <numeric>
#include <string>

namespace equichar {

namespace {

constexpr Int kMaxC = Int{1} << 16;

// Rethrows a failed materialization as InvalidCover: with validated input it
// means the ramification data cannot come from an actual cover.
template <typename F>
auto as_cover_error(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NegativeMultiplicity) fail(ErrorKind::InvalidCover, what + ": " + e.what());
    throw;
  }
}

}  // namespace

void TameCoverInput::validate() const {
  require(c >= 1 && c <= kMaxC, ErrorKind::Validation, "c must lie in 1..2^16");
  require(genus_base >= 0, ErrorKind::Validation, "genus of the quotient must be nonnegative");
  require(coeffs.size() == points.size(), ErrorKind::Validation, "one divisor coefficient per tame point expected");
  for (const auto& q : points) {
    require(q.e >= 1 && c % q.e == 0, ErrorKind::Validation, "ramification index must divide c");
    require(std::gcd(mod(q.theta_exp, q.e), q.e) == 1, ErrorKind::Validation, "theta exponent must be a unit mod e");
  }
  for (Int x : coeffs) require(x >= 0, ErrorKind::Validation, "divisor coefficients must be nonnegative");
  for (Int x : free_coeffs) require(x >= 0, ErrorKind::Validation, "divisor coefficients must be nonnegative");
}

bool TameCoverInput::divisor_is_zero() const {
  for (Int x : coeffs)
    if (x != 0) return false;
  for (Int x : free_coeffs)
    if (x != 0) return false;
  return true;
}

VirtualCModule chevalley_weil(const TameCoverInput& inp) {
  inp.validate();
  const Int c = inp.c;
  // Every term is a rational with denominator dividing c; accumulate c * a(psi^l).
  Int base = checked_mul(c, inp.genus_base - 1);
  for (std::size_t k = 0; k < inp.points.size(); ++k)
    base = checked_add(base, checked_mul(inp.coeffs[k], c / inp.points[k].e));
  for (Int x : inp.free_coeffs) base = checked_add(base, checked_mul(x, c));

  std::vector<Int> scaled(static_cast<std::size_t>(c), base);
  if (inp.divisor_is_zero()) scaled[0] = checked_add(scaled[0], c);

  for (std::size_t k = 0; k < inp.points.size(); ++k) {
    const Int e = inp.points[k].e;
    if (e == 1) continue;
    const Int b_inv = inverse_mod(inp.points[k].theta_exp, e);
    const Int weight = c / e;
    const Int m_q = inp.coeffs[k];
    for (Int l = 0; l < c; ++l) {
      // theta^i restricts to psi^l on the stabilizer iff i b = l (mod e); i ranges over 0..e-1.
      Int i = mod(checked_mul(l, b_inv), e);
      Int frac_num = mod(checked_sub(-m_q, i), e);  // <(-m_Q - i)/e> = frac_num / e
      auto& slot = scaled[static_cast<std::size_t>(l)];
      slot = checked_add(slot, checked_mul(frac_num, weight));
    }
  }

  std::vector<Int> mult(static_cast<std::size_t>(c));
  for (Int l = 0; l < c; ++l) {
    Int v = scaled[static_cast<std::size_t>(l)];
    if (v % c != 0)
      fail(ErrorKind::InvalidCover, "Chevalley-Weil multiplicity of psi^" + std::to_string(l) + " is " +
                                        Rational(v, c).str() + ", not an integer");
    if (v < 0)
      fail(ErrorKind::InvalidCover,
           "Chevalley-Weil multiplicity of psi^" + std::to_string(l) + " is negative (" + std::to_string(v / c) + ")");
    mult[static_cast<std::size_t>(l)] = v / c;
  }
  return {c, std::move(mult)};
}

GModuleDecomp cyclic_hdr(const CyclicCoverData& data, std::optional<std::size_t> q0) {
  data.validate();
  const GroupShape shape = data.shape();
  const Int p = data.p;
  const Int n = data.n;
  const Int h = shape.h_order();
  const Int m = data.max_m();
  auto p_pow = [p](Int e) { return checked_pow(p, static_cast<unsigned>(e)); };

  if (!data.points.empty()) {
    if (!q0) {
      for (std::size_t k = 0; k < data.points.size(); ++k)
        if (data.points[k].m() == m) {
          q0 = k;
          break;
        }
    }
    require(*q0 < data.points.size() && data.points[*q0].m() == m, ErrorKind::Validation,
            "Q0 must be a branch point with maximal m");
  }

  VirtualGModule acc(shape);
  acc.add(0, h, checked_mul(2, data.genus_base - 1));
  acc.add(0, h - p_pow(n - m) + 1, 2);
  for (std::size_t k = 0; k < data.points.size(); ++k) {
    const auto& pt = data.points[k];
    const Int m_q = pt.m();
    if (k != *q0) acc.add(0, h - p_pow(n - m_q), 2);
    Int u_prev = 1;
    Int u = 0;
    for (Int t = 0; t < m_q; ++t) {
      u = checked_add(u, pt.i_seq[static_cast<std::size_t>(t)]);
      acc.add(0, h - p_pow(n + t - m_q), checked_sub(u, u_prev));
      u_prev = u;
    }
  }
  return as_cover_error("de Rham formula for the Z/p^n-cover", [&] { return acc.materialize(); });
}

SemidirectResult semidirect_hdr(const SemidirectCoverData& data) {
  data.validate();
  if (data.wild.empty())
    fail(ErrorKind::EtaleUnsupported, "X -> Y is etale; only ramified Z/p x| Z/c covers are supported");
  const GroupShape& shape = data.shape;
  const Int c = shape.c;

  SemidirectResult r;
  r.genus_Y = genus_Y(data);

  TameCoverInput base{c, data.genus_base, data.tame, std::vector<Int>(data.tame.size(), 0), {}};
  auto with_divisor = [&](const std::vector<Int>& coeff) {
    TameCoverInput inp = base;
    for (std::size_t k = 0; k < data.wild.size(); ++k) {
      if (data.wild[k].anchor) inp.coeffs[*data.wild[k].anchor] = coeff[k];
      else inp.free_coeffs.push_back(coeff[k]);
    }
    return inp;
  };

  r.h0_omega = chevalley_weil(base);
  r.h0_omega_D = chevalley_weil(with_divisor(divisor_D(data)));
  r.h0_omega_Rprime = chevalley_weil(with_divisor(divisor_Rprime(data)));
  r.h1_O = dual(r.h0_omega);
  r.h1_O_minus_D = dual(r.h0_omega_D);

  const Int chi_inv = -shape.a_chi;
  r.v1 = r.h0_omega + r.h1_O;
  r.v2 = r.h0_omega_Rprime + twist(r.h1_O_minus_D, chi_inv) - twist(r.h1_O, chi_inv) - r.h0_omega;
  as_cover_error("V1", [&] { return materialize(r.v1, "V1"); });
  as_cover_error("V2", [&] { return materialize(r.v2, "V2"); });

  r.result = GModuleDecomp::jordan(shape, shape.p, r.v1) + GModuleDecomp::jordan(shape, shape.p - 1, r.v2);
  return r;
}

namespace {

void check_superelliptic(Int p, Int m, Int n) {
  require(p > 2 && is_prime(p), ErrorKind::Validation, "superelliptic family needs an odd prime p");
  require(m >= 1, ErrorKind::Validation, "m must be positive");
  require(m % p != 0, ErrorKind::Validation, "p must not divide m");
  require(n >= 1, ErrorKind::Validation, "n must be at least 1");
  require(checked_mul(m, p - 1) <= kMaxC, ErrorKind::Validation, "m(p-1) exceeds the bound 2^16 on c");
  require(n <= 40, ErrorKind::Validation, "n is too large");
}

struct Bezout {
  Int c1, c2;
};

// c2 p^{n-1} - c1 m = 1.
Bezout bezout(Int p, Int m, Int n) {
  const Int q = checked_pow(p, static_cast<unsigned>(n - 1));
  const Int c2 = inverse_mod(q, m);
  const Int c1 = (checked_mul(c2, q) - 1) / m;
  return {c1, c2};
}

}  // namespace

SemidirectCoverData superelliptic_data(Int p, Int m, Int n) {
  check_superelliptic(p, m, n);
  const Int c = m * (p - 1);
  const Int tail = (checked_pow(p, static_cast<unsigned>(n - 1)) - 1) / (p - 1);
  require(tail <= 10000, ErrorKind::Validation, "too many tame branch points");
  const auto [c1, c2] = bezout(p, m, n);

  SemidirectCoverData d;
  d.shape = GroupShape::make(p, 1, c, m);
  d.genus_base = 0;
  d.tame.push_back({c, mod(-1, c)});                                 // Q_0
  d.tame.push_back({c, mod(checked_sub(c2, checked_mul(m, c1)), c)});  // Q_infinity
  for (Int k = 0; k < tail; ++k) d.tame.push_back({m, mod(-1, m)});
  d.wild.push_back({std::size_t{1}, m});
  return d;
}

SuperellipticClosedForm superelliptic_closed_form(Int p, Int m, Int n, Int bezout_shift) {
  check_superelliptic(p, m, n);
  const Int big = m * (p - 1);
  const Int q = checked_pow(p, static_cast<unsigned>(n - 1));
  const Int tail = (q - 1) / (p - 1);

  SuperellipticClosedForm f;
  auto [c1, c2] = bezout(p, m, n);
  f.c1 = checked_add(c1, checked_mul(q, bezout_shift));
  f.c2 = checked_add(c2, checked_mul(m, bezout_shift));
  require(checked_sub(checked_mul(f.c2, q), checked_mul(f.c1, m)) == 1, ErrorKind::Internal, "Bezout relation broken");
  f.c3 = inverse_mod(checked_sub(f.c2, checked_mul(m, f.c1)), big);

  const Int d_coeff = ceil_div(m, p);
  const Int r_coeff = floor_div(checked_mul(m + 1, p - 1), p);

  auto to_int = [](const Rational& x, const char* name, Int l) {
    if (!x.is_integer() || x.num() < 0)
      fail(ErrorKind::Internal, std::string(name) + "_" + std::to_string(l) + " = " + x.str() +
                                    " is not a nonnegative integer");
    return x.num();
  };

  for (Int l = 0; l < big; ++l) {
    Rational delta = Rational(-1) + Rational(l, m).frac() * Rational(tail) + Rational(l, big).frac();
    Rational alpha = delta + Rational(-checked_mul(f.c3, l), big).frac() + Rational(l == 0 ? 1 : 0);
    Rational beta = delta + Rational(d_coeff, big) + Rational(-d_coeff - checked_mul(f.c3, l), big).frac();
    Rational gamma = delta + Rational(r_coeff, big) + Rational(-r_coeff - checked_mul(f.c3, l), big).frac();
    f.delta.push_back(delta);
    f.alpha.push_back(to_int(alpha, "alpha", l));
    f.beta.push_back(to_int(beta, "beta", l));
    f.gamma.push_back(to_int(gamma, "gamma", l));
  }

  auto at = [big](const std::vector<Int>& v, Int l) { return v[static_cast<std::size_t>(mod(l, big))]; };
  std::vector<Int> v1(static_cast<std::size_t>(big)), v2(static_cast<std::size_t>(big));
  for (Int l = 0; l < big; ++l) {
    v1[static_cast<std::size_t>(l)] = at(f.alpha, l) + at(f.alpha, -l);
    // H^1(O_Y)^{chi^{-1}} has psi^l-multiplicity alpha_{-l-m}, matching beta_{-l-m} for H^1(O_Y(-D))^{chi^{-1}}.
    v2[static_cast<std::size_t>(l)] = at(f.gamma, l) + at(f.beta, -l - m) - at(f.alpha, -l - m) - at(f.alpha, l);
  }
  f.v1 = VirtualCModule(big, std::move(v1));
  f.v2 = VirtualCModule(big, std::move(v2));
  materialize(f.v1, "V1");
  materialize(f.v2, "V2");

  const GroupShape shape = GroupShape::make(p, 1, big, m);
  f.result = GModuleDecomp::jordan(shape, p, f.v1) + GModuleDecomp::jordan(shape, p - 1, f.v2);
  return f;
}

}  // namespace equichar
