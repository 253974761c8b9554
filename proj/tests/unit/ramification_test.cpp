#include <gtest/gtest.h>

#include "equichar/ramification.hpp"
#include "generators.hpp"

using namespace equichar;

namespace {

WildBranchPoint pt(std::vector<Int> i_seq) { return WildBranchPoint{std::move(i_seq)}; }

// sum over i >= 0 of (#G_i - 1), reading #G_i off the lower jumps
Int literal_different(const WildBranchPoint& q, Int p) {
  const Jumps j = jumps(q, p);
  Int d = 0;
  for (Int i = 0; i <= j.lower.back(); ++i) {
    Int order = checked_pow(p, static_cast<unsigned>(q.m()));
    for (Int l : j.lower)
      if (i > l) order /= p;
    d += order - 1;
  }
  return d;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(Jumps, Examples) {
  const Jumps a = jumps(pt({1}), 3);
  EXPECT_EQ(a.upper, (std::vector<Int>{1}));
  EXPECT_EQ(a.lower, (std::vector<Int>{1}));
  const Jumps b = jumps(pt({2, 1}), 3);
  EXPECT_EQ(b.upper, (std::vector<Int>{2, 3}));
  EXPECT_EQ(b.lower, (std::vector<Int>{2, 5}));
  EXPECT_EQ(last_jump(pt({2, 1})), 3);
}

TEST(Jumps, RoundTripThroughISeq) {
  Rng rng(3);
  for (int k = 0; k < 500; ++k) {
    const Int p = gen::pick(rng, {2, 3, 5, 7});
    const WildBranchPoint q = gen::random_point(rng, p, rng.uniform(1, 4), 80);
    const Jumps j = jumps(q, p);
    EXPECT_EQ(WildBranchPoint::from_upper(j.upper), q);
    EXPECT_EQ(WildBranchPoint::from_lower(j.lower, p), q);
  }
}

TEST(Jumps, Validation) {
  EXPECT_EQ(kind_of([] { pt({3}).validate(3); }), ErrorKind::InvalidJump);
  EXPECT_EQ(kind_of([] { pt({}).validate(3); }), ErrorKind::InvalidJump);
  EXPECT_EQ(kind_of([] { pt({1, -1}).validate(3); }), ErrorKind::InvalidJump);
  EXPECT_EQ(kind_of([] { WildBranchPoint::from_lower({1, 3}, 3); }), ErrorKind::InvalidJump);
  EXPECT_NO_THROW(pt({1, 0, 4}).validate(2));
}

TEST(DifferentExponent, Examples) {
  EXPECT_EQ(different_exponent(WildBranchPoint::from_lower({1}, 3), 3), 4);
  EXPECT_EQ(literal_different(WildBranchPoint::from_lower({1}, 3), 3), 4);
  EXPECT_EQ(different_exponent(WildBranchPoint::from_lower({1, 3}, 2), 2), 8);
  EXPECT_EQ(literal_different(WildBranchPoint::from_lower({1, 3}, 2), 2), 8);
  for (Int p : {2, 3, 5, 7})
    for (Int l = 1; l < 40; ++l)
      if (l % p != 0) {
        EXPECT_EQ(different_exponent(pt({l}), p), (p - 1) * (l + 1));
      }
}

TEST(DifferentExponent, MatchesLiteralSum) {
  Rng rng(9);
  for (int k = 0; k < 500; ++k) {
    const Int p = gen::pick(rng, {2, 3, 5});
    const WildBranchPoint q = gen::random_point(rng, p, rng.uniform(1, 3), 60);
    if (jumps(q, p).lower.back() > 10000) continue;
    EXPECT_EQ(different_exponent(q, p), literal_different(q, p));
  }
}

TEST(GenusTop, Examples) {
  EXPECT_EQ(genus_top({5, 1, 2, {}}), 6);
  EXPECT_EQ(genus_top({3, 1, 0, {pt({5})}}), 4);
  EXPECT_EQ(genus_top({3, 1, 0, {pt({1}), pt({1})}}), 2);
  EXPECT_EQ(kind_of([] { genus_top({3, 1, 0, {}}); }), ErrorKind::InvalidCover);
}

TEST(CyclicCoverData, Validation) {
  EXPECT_EQ(kind_of([] { CyclicCoverData{3, 1, 0, {pt({1, 1})}}.validate(); }), ErrorKind::InvalidJump);
  EXPECT_EQ(kind_of([] { CyclicCoverData{3, 1, -1, {}}.validate(); }), ErrorKind::Validation);
  EXPECT_EQ(kind_of([] { CyclicCoverData{6, 1, 0, {}}.validate(); }), ErrorKind::Validation);
  EXPECT_EQ((CyclicCoverData{3, 2, 0, {pt({1}), pt({2, 1})}}.max_m()), 2);
}

TEST(QuotientCover, Truncates) {
  const CyclicCoverData q1 = derive_quotient_cover({3, 1, 0, {pt({1}), pt({2})}});
  EXPECT_EQ(q1.n, 0);
  EXPECT_TRUE(q1.points.empty());
  const CyclicCoverData q2 = derive_quotient_cover({3, 2, 1, {pt({2, 1}), pt({4})}});
  EXPECT_EQ(q2.n, 1);
  ASSERT_EQ(q2.points.size(), 1u);
  EXPECT_EQ(q2.points[0], pt({2}));
  EXPECT_THROW(derive_quotient_cover({3, 0, 1, {}}), Error);
}

TEST(Subcover, Examples) {
  // no point of full ramification: Y' -> Y is etale and every point splits
  const SubcoverData a = derive_subcover({3, 2, 2, {pt({1}), pt({2})}});
  EXPECT_EQ(a.cover.points.size(), 6u);
  EXPECT_TRUE(a.quotient_jumps.empty());
  EXPECT_EQ(a.cover.genus_base, 3 * (2 - 1) + 1);

  const SubcoverData b = derive_subcover({3, 2, 0, {pt({2, 1})}});
  ASSERT_EQ(b.cover.points.size(), 1u);
  EXPECT_EQ(b.cover.points[0], pt({5}));
  EXPECT_EQ(b.quotient_jumps, (std::vector<Int>{2}));
  EXPECT_THROW(derive_subcover({3, 0, 1, {}}), Error);
}

TEST(Subcover, IdentitiesOnRandomData) {
  Rng rng(31);
  for (int k = 0; k < 500; ++k) {
    const CyclicCoverData d = gen::random_cyclic(rng);
    const SubcoverData sub = derive_subcover(d);
    EXPECT_EQ(genus_top(sub.cover), genus_top(d));
    if (d.n < 2) continue;
    const Int p = d.p;
    EXPECT_EQ(static_cast<Int>(sub.cover.points.size()),
              p * static_cast<Int>(d.points.size()) - (p - 1) * static_cast<Int>(sub.quotient_jumps.size()));
    Int lhs = 0, rhs = 0;
    for (const auto& q : d.points) lhs += last_jump(q) - 1;
    for (const auto& q : sub.cover.points) rhs += last_jump(q) - 1;
    for (Int l : sub.quotient_jumps) rhs += (p - 1) * (l - 1);
    EXPECT_EQ(p * lhs, rhs);
  }
}

TEST(Semidirect, DivisorsAndValidation) {
  SemidirectCoverData d;
  d.shape = GroupShape::make(3, 1, 4, 2);
  d.tame = {{4, 3}, {4, 1}};
  d.wild = {{std::size_t{1}, 1}, {std::nullopt, 2}};
  EXPECT_EQ(divisor_D(d), (std::vector<Int>{1, 1}));
  EXPECT_EQ(divisor_Rprime(d), (std::vector<Int>{1, 2}));
  EXPECT_EQ(d.orbit_size(0), 1);
  EXPECT_EQ(d.orbit_size(1), 4);

  SemidirectCoverData bad = d;
  bad.wild[0].u = 3;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::InvalidJump);
  bad = d;
  bad.tame[0].e = 3;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::Validation);
  bad = d;
  bad.tame[0].theta_exp = 2;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::Validation);
  bad = d;
  bad.wild[1].anchor = 1;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::Validation);
  bad = d;
  bad.wild[1].anchor = 7;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::Validation);
}

TEST(Semidirect, DivisorCoefficientsForJumpM) {
  for (Int p : {3, 5, 7})
    for (Int m = 1; m < 12; ++m) {
      if (m % p == 0) continue;
      SemidirectCoverData d;
      d.shape = GroupShape::make(p, 1, 1, 0);
      d.wild = {{std::nullopt, m}};
      EXPECT_EQ(divisor_D(d)[0], (m + p - 1) / p);
      EXPECT_EQ(divisor_Rprime(d)[0], (m + 1) * (p - 1) / p);
    }
}

TEST(Semidirect, GenusOfY) {
  SemidirectCoverData d;
  d.shape = GroupShape::make(5, 1, 4, 1);
  d.genus_base = 2;
  EXPECT_EQ(genus_Y(d), 4 * (2 - 1) + 1);
  // y^2 = x over P^1 with C = Z/4: two totally ramified points
  d.shape = GroupShape::make(3, 1, 4, 2);
  d.genus_base = 0;
  d.tame = {{4, 3}, {4, 1}};
  EXPECT_EQ(genus_Y(d), 0);
  // plus one point with stabilizer of order 2: 2g - 2 = -8 + 3 + 3 + 2
  d.tame.push_back({2, 1});
  EXPECT_EQ(genus_Y(d), 1);
}

TEST(Semidirect, CyclicPartExpandsOrbits) {
  SemidirectCoverData d;
  d.shape = GroupShape::make(3, 1, 4, 2);
  d.genus_base = 1;
  d.tame = {{2, 1}};
  d.wild = {{std::size_t{0}, 2}, {std::nullopt, 1}};
  const CyclicCoverData c = cyclic_part(d);
  EXPECT_EQ(c.p, 3);
  EXPECT_EQ(c.n, 1);
  EXPECT_EQ(c.genus_base, genus_Y(d));
  EXPECT_EQ(c.points.size(), 2u + 4u);
}
