#include "equichar/checks.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace equichar {

namespace {

std::string eq_detail(Int lhs, Int rhs) { return std::to_string(lhs) + (lhs == rhs ? " = " : " != ") + std::to_string(rhs); }

Check guarded(const std::string& name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {name, false, std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

Int summand_count_expected(const CyclicCoverData& data) {
  Int expected = 2 * data.genus_base;
  if (data.is_etale()) return expected;
  for (const auto& pt : data.points) expected = checked_add(expected, last_jump(pt) + 1);
  return expected - 2;
}

}  // namespace

void CheckReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void CheckReport::append(const CheckReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool CheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

CheckReport invariants_dimension(const CyclicCoverData& data, const GModuleDecomp& result) {
  CheckReport r;
  const Int d = dim(result);
  const Int two_g = checked_mul(2, genus_top(data));
  r.add("dimension", d == two_g, "dim " + eq_detail(d, two_g) + " = 2 g_X");
  const Int s = result.summands();
  const Int expected = summand_count_expected(data);
  r.add("invariant count", s == expected, "summands " + eq_detail(s, expected));
  return r;
}

CheckReport invariants_dimension(const SemidirectCoverData& data, const SemidirectResult& res) {
  CheckReport r;
  const CyclicCoverData cyc = cyclic_part(data);
  const Int d = dim(res.result);
  const Int two_g = checked_mul(2, genus_top(cyc));
  r.add("dimension", d == two_g, "dim " + eq_detail(d, two_g) + " = 2 g_X");
  const Int dv1 = res.v1.dim();
  r.add("dim V1 = 2 g_Y", dv1 == 2 * res.genus_Y, eq_detail(dv1, 2 * res.genus_Y));
  r.add("V1 self-dual", dual(res.v1) == res.v1);

  for (Check c : invariants_dimension(cyc, forget_C(res.result)).checks) {
    c.name = "forgetting C: " + c.name;
    r.checks.push_back(std::move(c));
  }
  const GModuleDecomp expected = cyclic_hdr(cyc);
  r.add("forget C matches Z/p formula", forget_C(res.result) == expected,
        forget_C(res.result).str(false) + " vs " + expected.str(false));

  const GroupShape& s = data.shape;
  VirtualCModule layers(s.c);
  for (Int t = 0; t < s.p; ++t) layers = layers + twist(res.v1, -t * s.a_chi);
  for (Int t = 0; t + 1 < s.p; ++t) layers = layers + twist(res.v2, -t * s.a_chi);
  r.add("restriction to C", restrict_to_C(res.result) == layers);
  return r;
}

Check tower_identity(const CyclicCoverData& data) {
  return guarded("tower", [&] {
    const GModuleDecomp lhs = restrict_to_Hprime(cyclic_hdr(data));
    const GModuleDecomp rhs = cyclic_hdr(derive_subcover(data).cover);
    return Check{"tower", lhs == rhs, lhs.str(false) + (lhs == rhs ? " = " : " != ") + rhs.str(false)};
  });
}

Check trace_identity(const CyclicCoverData& data) {
  return guarded("trace", [&] {
    const GModuleDecomp top = cyclic_hdr(data);
    const GModuleDecomp quot = cyclic_hdr(derive_quotient_cover(data));
    const Int h = data.shape().h_order();
    const Int h2 = h / data.p;
    for (Int j = 1; j <= h2; ++j) {
      Int a = t_functor(top, h - h2 + j).dim();
      Int b = t_functor(quot, j).dim();
      if (a != b) return Check{"trace", false, "layer " + std::to_string(j) + ": " + eq_detail(a, b)};
    }
    return Check{"trace", true, std::to_string(h2) + " layers agree"};
  });
}

Check jump_bookkeeping_identity(const CyclicCoverData& data) {
  return guarded("jump bookkeeping", [&] {
    const Int p = data.p;
    const SubcoverData sub = derive_subcover(data);
    Int lhs = 0;
    for (const auto& pt : data.points) lhs = checked_add(lhs, last_jump(pt) - 1);
    lhs = checked_mul(p, lhs);
    Int rhs = 0;
    for (const auto& pt : sub.cover.points) rhs = checked_add(rhs, last_jump(pt) - 1);
    for (Int l : sub.quotient_jumps) rhs = checked_add(rhs, checked_mul(p - 1, l - 1));
    return Check{"jump bookkeeping", lhs == rhs, eq_detail(lhs, rhs)};
  });
}

Check branch_count_identity(const CyclicCoverData& data) {
  return guarded("branch count", [&] {
    const SubcoverData sub = derive_subcover(data);
    const Int lhs = static_cast<Int>(sub.cover.points.size());
    const Int rhs = data.p * static_cast<Int>(data.points.size()) -
                    (data.p - 1) * static_cast<Int>(sub.quotient_jumps.size());
    return Check{"branch count", lhs == rhs, eq_detail(lhs, rhs)};
  });
}

Check subcover_genus_identity(const CyclicCoverData& data) {
  return guarded("genus over subcover", [&] {
    const Int a = genus_top(data);
    const Int b = genus_top(derive_subcover(data).cover);
    return Check{"genus over subcover", a == b, eq_detail(a, b)};
  });
}

Check q0_independence(const CyclicCoverData& data) {
  return guarded("Q0 independence", [&] {
    const GModuleDecomp ref = cyclic_hdr(data);
    const Int m = data.max_m();
    Int choices = 0;
    for (std::size_t k = 0; k < data.points.size(); ++k) {
      if (data.points[k].m() != m) continue;
      ++choices;
      if (!(cyclic_hdr(data, k) == ref))
        return Check{"Q0 independence", false, "differs for Q0 = point " + std::to_string(k)};
    }
    return Check{"Q0 independence", true, std::to_string(choices) + " choices agree"};
  });
}

Check superelliptic_agreement(Int p, Int m, Int n) {
  return guarded("closed form vs pipeline", [&] {
    const GModuleDecomp a = superelliptic_closed_form(p, m, n).result;
    const GModuleDecomp b = semidirect_hdr(superelliptic_data(p, m, n)).result;
    return Check{"closed form vs pipeline", a == b, a.str(false) + (a == b ? " = " : " != ") + b.str(false)};
  });
}

Check superelliptic_genus_identity(Int p, Int m, Int n) {
  return guarded("genus identity", [&] {
    const auto f = superelliptic_closed_form(p, m, n);
    const Int lhs = checked_add(checked_mul(p, f.v1.dim()), checked_mul(p - 1, f.v2.dim()));
    const Int rhs = checked_mul(checked_pow(p, static_cast<unsigned>(n)) - 1, m - 1);
    return Check{"genus identity", lhs == rhs, eq_detail(lhs, rhs)};
  });
}

Check bezout_independence(Int p, Int m, Int n, Int radius) {
  return guarded("Bezout independence", [&] {
    const GModuleDecomp ref = superelliptic_closed_form(p, m, n).result;
    for (Int t = -radius; t <= radius; ++t)
      if (!(superelliptic_closed_form(p, m, n, t).result == ref))
        return Check{"Bezout independence", false, "differs at shift " + std::to_string(t)};
    return Check{"Bezout independence", true, std::to_string(2 * radius + 1) + " shifts agree"};
  });
}

CheckReport validate_cyclic(const CyclicCoverData& data) {
  CheckReport r;
  try {
    r.append(invariants_dimension(data, cyclic_hdr(data)));
  } catch (const Error& e) {
    r.add("dimension", false, std::string(to_string(e.kind())) + ": " + e.what());
    return r;
  }
  r.checks.push_back(q0_independence(data));
  if (data.n >= 1) {
    r.checks.push_back(tower_identity(data));
    r.checks.push_back(subcover_genus_identity(data));
    if (!data.is_etale()) r.checks.push_back(trace_identity(data));
  }
  if (data.n >= 2) {
    r.checks.push_back(jump_bookkeeping_identity(data));
    r.checks.push_back(branch_count_identity(data));
  }
  return r;
}

CheckReport validate_semidirect(const SemidirectCoverData& data) {
  CheckReport r;
  try {
    r.append(invariants_dimension(data, semidirect_hdr(data)));
  } catch (const Error& e) {
    r.add("dimension", false, std::string(to_string(e.kind())) + ": " + e.what());
  }
  return r;
}

CheckReport validate_superelliptic(Int p, Int m, Int n) {
  CheckReport r;
  const SemidirectCoverData data = superelliptic_data(p, m, n);
  r.append(validate_semidirect(data));
  r.checks.push_back(superelliptic_agreement(p, m, n));
  r.checks.push_back(superelliptic_genus_identity(p, m, n));
  r.checks.push_back(bezout_independence(p, m, n));
  r.checks.push_back(guarded("H0(Omega_Y) = alpha", [&] {
    const auto f = superelliptic_closed_form(p, m, n);
    const auto cw = semidirect_hdr(data).h0_omega;
    return Check{"H0(Omega_Y) = alpha", cw.mult() == f.alpha, cw.str()};
  }));
  return r;
}

}  // namespace equichar
