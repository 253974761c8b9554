#include <gtest/gtest.h>

#include "equichar/checks.hpp"
#include "generators.hpp"

using namespace equichar;

namespace {

void expect_ok(const Check& c) { EXPECT_TRUE(c.passed) << c.name << ": " << c.detail; }

void expect_ok(const CheckReport& r) {
  for (const auto& c : r.checks) expect_ok(c);
}

}  // namespace

TEST(Checks, TowerTraceAndBookkeepingOnRandomCovers) {
  Rng rng(101);
  for (int k = 0; k < 150; ++k) {
    const CyclicCoverData d = gen::random_cyclic(rng);
    expect_ok(tower_identity(d));
    expect_ok(subcover_genus_identity(d));
    if (!d.is_etale()) expect_ok(trace_identity(d));
    if (d.n >= 2) {
      expect_ok(jump_bookkeeping_identity(d));
      expect_ok(branch_count_identity(d));
    }
    expect_ok(invariants_dimension(d, cyclic_hdr(d)));
  }
}

TEST(Checks, EtaleTowers) {
  for (Int p : {2, 3, 5})
    for (Int n = 1; n <= 3; ++n)
      for (Int g = 1; g <= 3; ++g) {
        const CyclicCoverData d{p, n, g, {}};
        expect_ok(validate_cyclic(d));
      }
}

TEST(Checks, Q0IndependenceWithSeveralMaximalPoints) {
  Rng rng(202);
  gen::CyclicSpec spec;
  spec.min_maximal_points = 2;
  for (int k = 0; k < 100; ++k) {
    const CyclicCoverData d = gen::random_cyclic(rng, spec);
    const Check c = q0_independence(d);
    expect_ok(c);
  }
}

TEST(Checks, SuperellipticSuite) {
  expect_ok(validate_superelliptic(3, 2, 2));
  expect_ok(validate_superelliptic(5, 3, 2));
  expect_ok(validate_superelliptic(7, 1, 1));
}

TEST(Checks, FailuresAreRecordedNotThrown) {
  // g_Y = 0 and no fully ramified point: the formula cannot materialize
  const CyclicCoverData bad{3, 2, 0, {WildBranchPoint{{1}}}};
  const CheckReport r = validate_cyclic(bad);
  EXPECT_FALSE(r.ok());
  const Check t = tower_identity(bad);
  EXPECT_FALSE(t.passed);
  EXPECT_NE(t.detail.find("InvalidCover"), std::string::npos);
}

TEST(Checks, ValidateListsApplicableChecks) {
  const CyclicCoverData d{3, 2, 1, {WildBranchPoint{{1, 2}}, WildBranchPoint{{2}}}};
  const CheckReport r = validate_cyclic(d);
  expect_ok(r);
  std::vector<std::string> names;
  for (const auto& c : r.checks) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"dimension", "invariant count", "Q0 independence", "tower",
                                             "genus over subcover", "trace", "jump bookkeeping", "branch count"}));
}
