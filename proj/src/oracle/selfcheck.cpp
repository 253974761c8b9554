#include "equichar/oracle/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace equichar::oracle {

namespace {

std::string show(const std::vector<VirtualCModule>& t) {
  std::string out = "[";
  for (std::size_t j = 0; j < t.size(); ++j) out += (j ? ", " : "") + t[j].str();
  return out + "]";
}

std::string label(const GroupShape& s) {
  return "(p=" + std::to_string(s.p) + ", n=" + std::to_string(s.n) + ", c=" + std::to_string(s.c) +
         ", a=" + std::to_string(s.a_chi) + ")";
}

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  // Runs one case; Error exceptions count as failures.
  void run(const std::string& where, const std::function<std::string()>& body) {
    ++r_.cases;
    std::string why;
    try {
      why = body();
    } catch (const Error& e) {
      why = std::string(to_string(e.kind())) + ": " + e.what();
    }
    if (why.empty()) return;
    if (r_.failures++ == 0) r_.first_failure = where + ": " + why;
  }

  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

// Multiset containment of characters.
bool contained(const VirtualCModule& a, const VirtualCModule& b) {
  for (Int l = 0; l < a.modulus(); ++l)
    if (a[l] > b[l]) return false;
  return true;
}

}  // namespace

bool SelfcheckReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

std::vector<GroupShape> oracle_shapes() {
  std::vector<GroupShape> out;
  for (Int p : {2, 3, 5})
    for (Int c : {1, 2, 4, 6}) {
      if (std::gcd(p, c) != 1) continue;
      for (Int a = 0; a < c; ++a) {
        if ((p - 1) * a % c != 0) continue;
        for (Int n = 0, h = 1; h <= 27; ++n, h *= p) out.push_back(GroupShape::make(p, n, c, a));
      }
    }
  return out;
}

Matrix random_invertible(const GaloisField& F, Int d, Rng& rng) {
  for (;;) {
    Matrix a(d, d);
    for (Int i = 0; i < d; ++i)
      for (Int j = 0; j < d; ++j) a.at(i, j) = static_cast<Elem>(rng.uniform(0, F.q() - 1));
    if (rank(F, a) == d) return a;
  }
}

RandomModule random_module(const ShapeContext& ctx, Rng& rng, Int max_dim) {
  const GroupShape& s = ctx.shape;
  const Int target = rng.uniform(1, max_dim);
  RandomModule out{GModuleDecomp(s), {}, {}};
  std::map<IndecKey, MatrixModule> cache;
  Int d = 0;
  bool first = true;
  while (d < target) {
    const Int i = rng.uniform(1, std::min(s.h_order(), target - d));
    const Int l = rng.uniform(0, s.c - 1);
    out.expected.add(l, i, 1);
    auto it = cache.find({l, i});
    if (it == cache.end()) it = cache.emplace(IndecKey{l, i}, realize(ctx, l, i)).first;
    out.plain = first ? it->second : direct_sum(out.plain, it->second);
    first = false;
    d += i;
  }
  out.shuffled = conjugate(out.plain, random_invertible(*ctx.field, d, rng));
  return out;
}

SelfcheckReport run_selfcheck(const SelfcheckConfig& config) {
  require(config.count >= 0, ErrorKind::Validation, "self-check count must be nonnegative");
  require(config.sample_dim >= 1, ErrorKind::Validation, "self-check sample dimension must be positive");
  SelfcheckReport report{config, {}};
  const auto shapes = oracle_shapes();
  const Int sample_dim = std::min(config.sample_dim, config.max_dim);

  // Exhaustive over the shape grid: round trip, layer dimensions, regular module.
  Suite round_trip("realize round trip");
  Suite layer_dims("layer dimensions of J_l");
  Suite reg("regular representation");
  for (const auto& s : shapes) {
    const ShapeContext ctx = ShapeContext::make(s, config.max_dim);
    const Int h = s.h_order();
    for (Int i = 1; i <= std::min(h, config.max_dim); ++i) {
      for (Int l = 0; l < s.c; ++l)
        round_trip.run(label(s) + " J_" + std::to_string(i) + "(psi^" + std::to_string(l) + ")", [&]() -> std::string {
          const GModuleDecomp got = decompose(realize(ctx, l, i));
          const GModuleDecomp want = GModuleDecomp::indecomposable(s, l, i);
          return got == want ? "" : got.str(false);
        });
      layer_dims.run(label(s) + " J_" + std::to_string(i), [&]() -> std::string {
        const auto t = t_char_decomp(realize(ctx, 0, i));
        for (Int j = 1; j <= h; ++j)
          if (t[static_cast<std::size_t>(j - 1)].dim() != (j <= i ? 1 : 0)) return "layer " + std::to_string(j);
        return "";
      });
    }
    if (h * s.c <= config.max_dim)
      reg.run(label(s), [&]() -> std::string {
        GModuleDecomp want(s);
        for (Int l = 0; l < s.c; ++l) want.add(l, h, 1);
        const GModuleDecomp got = decompose(regular(ctx));
        return got == want ? "" : got.str(false);
      });
  }

  // Random J-sums under a random change of basis.
  Suite t_layers("T-functor vs linear algebra");
  Suite decomp("decomposition of random sums");
  Suite basis("basis-change invariance");
  Suite mono("socle layer monotonicity");
  Suite upper("upper layers vs fixed submodule");
  Suite hprime("restriction to H'");
  for (Int k = 0; k < config.count; ++k) {
    Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(k)));
    const GroupShape& s = shapes[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(shapes.size()) - 1))];
    const ShapeContext ctx = ShapeContext::make(s, config.max_dim);
    const std::string where = "case " + std::to_string(k) + " " + label(s);

    RandomModule rm;
    try {
      rm = random_module(ctx, rng, sample_dim);
    } catch (const Error& e) {
      decomp.run(where, [&]() -> std::string { return std::string("construction failed: ") + e.what(); });
      continue;
    }
    std::vector<VirtualCModule> t;
    t_layers.run(where, [&]() -> std::string {
      t = t_char_decomp(rm.shuffled);
      const auto want = t_data(rm.expected);
      return t == want ? "" : show(t) + " vs " + show(want);
    });
    if (t.empty()) continue;
    decomp.run(where, [&]() -> std::string {
      const GModuleDecomp got = from_t_data(s, t);
      return got == rm.expected ? "" : got.str(false) + " vs " + rm.expected.str(false);
    });
    basis.run(where, [&]() -> std::string {
      const GModuleDecomp a = decompose(rm.plain);
      const GModuleDecomp b = from_t_data(s, t);
      return a == b ? "" : a.str(false) + " vs " + b.str(false);
    });
    const Int h = s.h_order();

    mono.run(where, [&]() -> std::string {
      for (Int j = 1; j < h; ++j) {
        const auto& cur = t[static_cast<std::size_t>(j - 1)];
        const auto& next = t[static_cast<std::size_t>(j)];
        if (cur.dim() < next.dim()) return "dim T^" + std::to_string(j) + " < dim T^" + std::to_string(j + 1);
        if (!contained(next, twist(cur, -s.a_chi))) return "T^" + std::to_string(j + 1) + " not inside T^" + std::to_string(j) + " twisted";
      }
      return "";
    });
    if (s.n == 0) continue;

    upper.run(where, [&]() -> std::string {
      const Int h2 = h / s.p;
      const Matrix fixed = socle_filtration_step(rm.shuffled, h2);
      if (fixed.cols() == 0) return "";
      MatrixModule sub = submodule(rm.shuffled, fixed);
      // sigma generates H/H'' on the fixed submodule
      ShapeContext quotient_ctx = ctx;
      quotient_ctx.shape = GroupShape::make(s.p, s.n - 1, s.c, s.a_chi);
      quotient_ctx.chi_lift = h2 == 1 ? 0 : ctx.chi_lift % h2;
      sub.ctx = quotient_ctx;
      const auto ts = t_char_decomp(sub);
      for (Int j = 1; j <= h2; ++j) {
        const Int lhs = t[static_cast<std::size_t>(h - h2 + j - 1)].dim();
        const Int rhs = ts[static_cast<std::size_t>(j - 1)].dim();
        if (lhs > rhs) return "layer " + std::to_string(j) + ": " + std::to_string(lhs) + " > " + std::to_string(rhs);
      }
      return "";
    });
    hprime.run(where, [&]() -> std::string {
      const MatrixModule res = restrict_to_Hprime(rm.shuffled);
      const auto tr = t_char_decomp(res);
      // T^i_{H'} M = T^{pi-p+1} M + ... + T^{pi} M
      for (Int i = 1; i <= h / s.p; ++i) {
        VirtualCModule sum(s.c);
        for (Int j = s.p * i - s.p + 1; j <= s.p * i; ++j) sum = sum + t[static_cast<std::size_t>(j - 1)];
        if (!(sum == tr[static_cast<std::size_t>(i - 1)])) return "layer " + std::to_string(i) + " of the restriction";
      }
      const GModuleDecomp got = from_t_data(res.ctx.shape, tr);
      const GModuleDecomp want = equichar::restrict_to_Hprime(rm.expected);
      return got == want ? "" : got.str(false) + " vs " + want.str(false);
    });
  }

  for (const Suite* s : {&round_trip, &layer_dims, &reg, &t_layers, &decomp, &basis, &mono, &upper, &hprime})
    report.suites.push_back(s->result());
  return report;
}

}  // namespace equichar::oracle
