#include "equichar/ramification.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace equichar {

namespace {

constexpr std::size_t kMaxBranchPoints = 10000;

Int genus_from_twice_euler(Int twice_g_minus_two, const char* what) {
  // 2g - 2 = x  =>  g = x/2 + 1
  if (mod(twice_g_minus_two, 2) != 0)
    fail(ErrorKind::InvalidCover, std::string("Riemann-Hurwitz gives a non-integral genus for ") + what);
  Int g = twice_g_minus_two / 2 + 1;
  if (g < 0) fail(ErrorKind::InvalidCover, std::string("Riemann-Hurwitz gives a negative genus for ") + what);
  return g;
}

}  // namespace

void WildBranchPoint::validate(Int p) const {
  if (i_seq.empty()) fail(ErrorKind::InvalidJump, "a wild branch point needs at least one jump");
  if (i_seq[0] < 1) fail(ErrorKind::InvalidJump, "i^(0) must be positive");
  if (i_seq[0] % p == 0)
    fail(ErrorKind::InvalidJump, "i^(0) = " + std::to_string(i_seq[0]) + " is divisible by p = " + std::to_string(p));
  for (std::size_t t = 1; t < i_seq.size(); ++t)
    if (i_seq[t] < 0) fail(ErrorKind::InvalidJump, "i^(" + std::to_string(t) + ") must be nonnegative");
}

WildBranchPoint WildBranchPoint::from_upper(const std::vector<Int>& upper) {
  WildBranchPoint pt;
  Int prev = 0;
  for (Int u : upper) {
    pt.i_seq.push_back(checked_sub(u, prev));
    prev = u;
  }
  return pt;
}

WildBranchPoint WildBranchPoint::from_lower(const std::vector<Int>& lower, Int p) {
  WildBranchPoint pt;
  Int prev = 0;
  Int pk = 1;
  for (std::size_t t = 0; t < lower.size(); ++t) {
    Int d = checked_sub(lower[t], prev);
    if (d % pk != 0)
      fail(ErrorKind::InvalidJump, "lower jumps l^(" + std::to_string(t) + ") -> l^(" + std::to_string(t + 1) +
                                       ") differ by " + std::to_string(d) + ", not a multiple of " + std::to_string(pk));
    pt.i_seq.push_back(d / pk);
    prev = lower[t];
    pk = checked_mul(pk, p);
  }
  return pt;
}

Jumps jumps(const WildBranchPoint& pt, Int p) {
  Jumps j;
  Int u = 0, l = 0, pk = 1;
  for (Int i : pt.i_seq) {
    u = checked_add(u, i);
    l = checked_add(l, checked_mul(i, pk));
    pk = checked_mul(pk, p);
    j.upper.push_back(u);
    j.lower.push_back(l);
  }
  return j;
}

Int last_jump(const WildBranchPoint& pt) {
  Int u = 0;
  for (Int i : pt.i_seq) u = checked_add(u, i);
  return u;
}

Int different_exponent(const WildBranchPoint& pt, Int p) {
  pt.validate(p);
  const Jumps j = jumps(pt, p);
  const Int m = pt.m();
  // #G_i = p^(m-t+1) for l^(t-1) < i <= l^(t), with l^(0) := -1.
  Int d = 0;
  Int prev = -1;
  for (Int t = 1; t <= m; ++t) {
    Int order = checked_pow(p, static_cast<unsigned>(m - t + 1));
    Int width = checked_sub(j.lower[static_cast<std::size_t>(t - 1)], prev);
    d = checked_add(d, checked_mul(order - 1, width));
    prev = j.lower[static_cast<std::size_t>(t - 1)];
  }
  return d;
}

void CyclicCoverData::validate() const {
  GroupShape::make(p, n);
  require(genus_base >= 0, ErrorKind::Validation, "genus of the base must be nonnegative");
  require(points.size() <= kMaxBranchPoints, ErrorKind::Validation, "too many branch points");
  for (const auto& pt : points) {
    pt.validate(p);
    if (pt.m() > n)
      fail(ErrorKind::InvalidJump, "a branch point has " + std::to_string(pt.m()) +
                                       " jumps but the group is Z/p^" + std::to_string(n));
  }
}

Int CyclicCoverData::max_m() const {
  Int m = 0;
  for (const auto& pt : points) m = std::max(m, pt.m());
  return m;
}

Int genus_top(const CyclicCoverData& data) {
  data.validate();
  const Int h = data.shape().h_order();
  Int rhs = checked_mul(h, checked_sub(checked_mul(2, data.genus_base), 2));
  for (const auto& pt : data.points) {
    Int fibre = h / checked_pow(data.p, static_cast<unsigned>(pt.m()));
    rhs = checked_add(rhs, checked_mul(fibre, different_exponent(pt, data.p)));
  }
  return genus_from_twice_euler(rhs, "the top curve");
}

CyclicCoverData derive_quotient_cover(const CyclicCoverData& data) {
  data.validate();
  require(data.n >= 1, ErrorKind::Validation, "quotient cover needs n >= 1");
  CyclicCoverData out{data.p, data.n - 1, data.genus_base, {}};
  for (const auto& pt : data.points) {
    if (pt.m() <= 1) continue;
    out.points.push_back(WildBranchPoint{std::vector<Int>(pt.i_seq.begin(), pt.i_seq.end() - 1)});
  }
  return out;
}

SubcoverData derive_subcover(const CyclicCoverData& data) {
  data.validate();
  require(data.n >= 1, ErrorKind::Validation, "subcover needs n >= 1");
  const Int p = data.p;
  SubcoverData out;
  out.cover.p = p;
  out.cover.n = data.n - 1;

  // Riemann-Hurwitz for the Z/p-cover Y' -> Y, branched where m_Q = n.
  Int rhs = checked_mul(p, checked_sub(checked_mul(2, data.genus_base), 2));
  for (const auto& pt : data.points) {
    if (pt.m() < data.n) {
      for (Int k = 0; k < p; ++k) out.cover.points.push_back(pt);
      continue;
    }
    Int jump = pt.i_seq[0];  // l^(1)_{Y'/Y} = u^(1)_{X/Y}
    out.quotient_jumps.push_back(jump);
    rhs = checked_add(rhs, checked_mul(p - 1, checked_add(jump, 1)));
    if (data.n == 1) continue;  // X -> Y' is the identity
    WildBranchPoint sub;
    sub.i_seq.push_back(checked_add(pt.i_seq[0], checked_mul(p, pt.i_seq[1])));
    for (std::size_t t = 2; t < pt.i_seq.size(); ++t) sub.i_seq.push_back(checked_mul(p, pt.i_seq[t]));
    out.cover.points.push_back(std::move(sub));
  }
  out.cover.genus_base = genus_from_twice_euler(rhs, "the intermediate curve Y'");
  return out;
}

void SemidirectCoverData::validate() const {
  GroupShape::make(shape.p, shape.n, shape.c, shape.a_chi);
  require(shape.n == 1, ErrorKind::Validation, "semidirect data must have a p-Sylow subgroup of order p");
  require(genus_base >= 0, ErrorKind::Validation, "genus of Z must be nonnegative");
  require(tame.size() + wild.size() <= 2 * kMaxBranchPoints, ErrorKind::Validation, "too many branch points");
  for (const auto& t : tame) {
    require(t.e >= 1 && shape.c % t.e == 0, ErrorKind::Validation,
            "tame ramification index " + std::to_string(t.e) + " does not divide c = " + std::to_string(shape.c));
    require(std::gcd(mod(t.theta_exp, t.e), t.e) == 1, ErrorKind::Validation,
            "theta exponent " + std::to_string(t.theta_exp) + " is not a unit modulo e = " + std::to_string(t.e));
  }
  std::set<std::size_t> anchors;
  for (const auto& w : wild) {
    if (w.anchor) {
      require(*w.anchor < tame.size(), ErrorKind::Validation,
              "wild orbit anchored at nonexistent tame point " + std::to_string(*w.anchor));
      require(anchors.insert(*w.anchor).second, ErrorKind::Validation,
              "two wild orbits anchored at tame point " + std::to_string(*w.anchor));
    }
    if (w.u < 1) fail(ErrorKind::InvalidJump, "jump u must be positive");
    if (w.u % shape.p == 0)
      fail(ErrorKind::InvalidJump, "jump u = " + std::to_string(w.u) + " is divisible by p");
  }
}

Int SemidirectCoverData::orbit_size(std::size_t k) const {
  const auto& w = wild.at(k);
  return w.anchor ? shape.c / tame.at(*w.anchor).e : shape.c;
}

std::vector<Int> divisor_D(const SemidirectCoverData& data) {
  data.validate();
  std::vector<Int> out;
  for (const auto& w : data.wild) out.push_back(ceil_div(w.u, data.shape.p));
  return out;
}

std::vector<Int> divisor_Rprime(const SemidirectCoverData& data) {
  data.validate();
  const Int p = data.shape.p;
  std::vector<Int> out;
  for (const auto& w : data.wild) out.push_back(floor_div(checked_mul(checked_add(w.u, 1), p - 1), p));
  return out;
}

Int genus_Y(const SemidirectCoverData& data) {
  data.validate();
  const Int c = data.shape.c;
  Int rhs = checked_mul(c, checked_sub(checked_mul(2, data.genus_base), 2));
  for (const auto& t : data.tame) rhs = checked_add(rhs, checked_mul(c / t.e, t.e - 1));
  return genus_from_twice_euler(rhs, "Y");
}

CyclicCoverData cyclic_part(const SemidirectCoverData& data) {
  CyclicCoverData out{data.shape.p, 1, genus_Y(data), {}};
  for (std::size_t k = 0; k < data.wild.size(); ++k) {
    Int size = data.orbit_size(k);
    require(out.points.size() + static_cast<std::size_t>(size) <= kMaxBranchPoints, ErrorKind::Validation,
            "too many branch points of X -> Y");
    for (Int r = 0; r < size; ++r) out.points.push_back(WildBranchPoint{{data.wild[k].u}});
  }
  return out;
}

}  // namespace equichar
