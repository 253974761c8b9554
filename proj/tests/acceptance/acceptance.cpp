// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "equichar/checks.hpp"
#include "equichar/oracle/selfcheck.hpp"
#include "generators.hpp"

using namespace equichar;

namespace {

const std::vector<std::array<Int, 3>> kGrid{{3, 2, 1}, {3, 2, 2}, {3, 4, 2}, {5, 2, 1}, {5, 3, 2}, {7, 2, 1}};

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

std::string describe(const CyclicCoverData& d) {
  std::ostringstream os;
  os << "p=" << d.p << " n=" << d.n << " g=" << d.genus_base << " points=" << d.points.size();
  return os.str();
}

template <class F>
Outcome guarded(F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const Error& e) {
    o.fail(std::string("unexpected ") + to_string(e.kind()) + ": " + e.what());
  } catch (const std::exception& e) {
    o.fail(std::string("unexpected exception: ") + e.what());
  }
  return o;
}

void superelliptic_agreement_grid(Outcome& o) {
  for (const auto& [p, m, n] : kGrid) {
    const auto f = superelliptic_closed_form(p, m, n);
    const auto g = semidirect_hdr(superelliptic_data(p, m, n));
    if (f.result != g.result)
      o.fail("(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + "): " + f.result.str(false) +
             " vs " + g.result.str(false));
  }
}

void genus_grid(Outcome& o) {
  for (const auto& [p, m, n] : kGrid) {
    const auto f = superelliptic_closed_form(p, m, n);
    const Int lhs = p * f.v1.dim() + (p - 1) * f.v2.dim();
    const Int rhs = (checked_pow(p, static_cast<unsigned>(n)) - 1) * (m - 1);
    if (lhs != rhs) o.fail("(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + "): " +
                           std::to_string(lhs) + " != " + std::to_string(rhs));
  }
}

void cyclic_tower(Outcome& o) {
  Rng rng(20240301);
  for (int k = 0; k < 200; ++k) {
    const CyclicCoverData d = gen::random_cyclic(rng);
    const GModuleDecomp m = cyclic_hdr(d);
    if (restrict_to_Hprime(m) != cyclic_hdr(derive_subcover(d).cover)) o.fail("restriction: " + describe(d));
    if (!d.is_etale() && !trace_identity(d).passed) o.fail("trace: " + describe(d));
    if (d.n >= 2 && !jump_bookkeeping_identity(d).passed) o.fail("jump bookkeeping: " + describe(d));
    if (dim(m) != 2 * genus_top(d)) o.fail("dimension: " + describe(d));
  }
}

void independence(Outcome& o) {
  Rng rng(20240302);
  gen::CyclicSpec spec;
  for (int k = 0; k < 100; ++k) {
    spec.min_maximal_points = rng.uniform(2, 3);
    const CyclicCoverData d = gen::random_cyclic(rng, spec);
    const Check c = q0_independence(d);
    if (!c.passed) o.fail("Q0: " + describe(d) + ": " + c.detail);
  }
  for (int k = 0; k < 100; ++k) {
    const auto [p, m, n] = gen::random_superelliptic(rng);
    const Check c = bezout_independence(p, m, n);
    if (!c.passed) o.fail("(c1, c2): " + c.detail);
  }
}

void oracle_equivalence(Outcome& o) {
  oracle::SelfcheckConfig cfg;
  cfg.seed = 42;
  cfg.count = 200;
  cfg.sample_dim = 200;
  const oracle::SelfcheckReport r = oracle::run_selfcheck(cfg);
  for (const auto& s : r.suites)
    if (!s.ok()) o.fail(s.name + ": " + s.first_failure);
}

void orbit_recovery(Outcome& o) {
  Rng rng(20240306);
  for (int k = 0; k < 500; ++k) {
    const GroupShape s = gen::random_shape(rng, 1, {2, 3, 5, 7}, 12);
    const VirtualCModule m = gen::random_cmodule(rng, s.c, 5);
    if (recover_orbit_factor(orbit_sum(m, s.chi(), s.p), s.chi(), s.p) != m) o.fail("round trip " + m.str());
  }
  auto expect_rejected = [&](const VirtualCModule& n, const GroupShape& s) {
    try {
      recover_orbit_factor(n, s.chi(), s.p);
      o.fail("accepted " + n.str() + " for p=" + std::to_string(s.p));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAnOrbitSum) o.fail(std::string("wrong error ") + to_string(e.kind()));
    }
  };
  int wrong_dim = 0, structural = 0;
  while (wrong_dim < 25 || structural < 25) {
    const GroupShape s = gen::random_shape(rng, 1, {2, 3, 5, 7}, 6);
    const VirtualCModule n = gen::random_cmodule(rng, s.c, 3);
    if (n.dim() % s.p != 0) {
      if (wrong_dim < 25) {
        expect_rejected(n, s);
        ++wrong_dim;
      }
    } else if (structural < 25 && n.dim() > 0 && gen::brute_force_factors(n, s.a_chi, s.p).empty()) {
      expect_rejected(n, s);
      ++structural;
    }
  }
}

void degenerations(Outcome& o) {
  Rng rng(20240307);
  for (int k = 0; k < 50; ++k) {
    const SemidirectCoverData d = gen::random_semidirect_trivial_c(rng);
    if (semidirect_hdr(d).result != cyclic_hdr(cyclic_part(d))) o.fail("c = 1: " + describe(cyclic_part(d)));
  }
  for (Int p : {2, 3, 5})
    for (Int n = 1; n <= 3; ++n)
      for (Int g = 1; g <= 4; ++g) {
        const GroupShape s = GroupShape::make(p, n);
        GModuleDecomp expected(s);
        expected.add(0, s.h_order(), 2 * (g - 1));
        expected.add(0, 1, 2);
        const CyclicCoverData d{p, n, g, {}};
        if (cyclic_hdr(d) != expected) o.fail("etale: " + describe(d));
      }
  try {
    cyclic_hdr({3, 1, 0, {}});
    o.fail("etale cover of genus 0 accepted");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidCover) o.fail("etale genus 0 raised " + std::string(to_string(e.kind())));
  }
  for (int k = 0; k < 50; ++k) {
    CyclicCoverData d;
    d.p = gen::pick(rng, {2, 3, 5});
    d.n = rng.uniform(1, 3);
    d.points.push_back(gen::random_point(rng, d.p, d.n, 40));
    try {
      const GModuleDecomp m = cyclic_hdr(d);
      if (dim(m) != 2 * genus_top(d)) o.fail("single point dimension: " + describe(d));
    } catch (const Error& e) {
      o.fail("single point over P^1: " + std::string(to_string(e.kind())) + " for " + describe(d));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "superelliptic closed form equals the generic pipeline", 1.0, superelliptic_agreement_grid},
      {2, "superelliptic genus identity", 1.0, genus_grid},
      {3, "cyclic tower, trace, jump bookkeeping and dimension on 200 covers", 5.0, cyclic_tower},
      {4, "Q0 and (c1, c2) independence on 100 instances each", 5.0, independence},
      {5, "oracle equivalence on 200 random modules", 30.0, oracle_equivalence},
      {6, "orbit factor recovery and rejection", 5.0, orbit_recovery},
      {7, "degenerations: trivial C, etale, genus 0", 5.0, degenerations},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = guarded([&](Outcome& out) { c.body(out); });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_s) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    all = all && o.ok;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.ok ? "" : ": ",
                o.detail.c_str());
  }
  return all ? 0 : 1;
}
