#include <gtest/gtest.h>

#include <functional>

#include "equichar/oracle/matrix_module.hpp"
#include "equichar/repthy_g.hpp"
#include "generators.hpp"

using namespace equichar;

namespace {

GroupShape shape(Int p, Int n, Int c = 1, Int a = 0) { return GroupShape::make(p, n, c, a); }

GModuleDecomp J(const GroupShape& s, Int i, Int l = 0, Int k = 1) { return GModuleDecomp::indecomposable(s, l, i, k); }

// Every module over s of dimension exactly d.
void for_each_gmodule(const GroupShape& s, Int d, const std::function<void(const GModuleDecomp&)>& f) {
  std::vector<IndecKey> keys;
  for (Int i = 1; i <= s.h_order(); ++i)
    for (Int l = 0; l < s.c; ++l) keys.push_back({l, i});
  GModuleDecomp cur(s);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int left) {
    if (left == 0) {
      f(cur);
      return;
    }
    if (k == keys.size()) return;
    const auto [l, i] = keys[k];
    GModuleDecomp saved = cur;
    for (Int mult = 0; mult * i <= left; ++mult) {
      rec(k + 1, left - mult * i);
      cur.add(l, i, 1);
    }
    cur = saved;
  };
  rec(0, d);
}

}  // namespace

TEST(GroupShape, Validation) {
  EXPECT_NO_THROW(shape(3, 1, 4, 2));
  EXPECT_THROW(shape(4, 1), Error);        // not prime
  EXPECT_THROW(shape(3, 1, 6, 0), Error);  // p | c
  EXPECT_THROW(shape(3, 1, 4, 1), Error);  // chi of order 4 does not factor through F_3^x
  EXPECT_THROW(shape(3, -1), Error);
  EXPECT_EQ(shape(5, 2, 4, 1).sub_shape(), shape(5, 1, 4, 1));
}

TEST(GModuleDecomp, Dimension) {
  EXPECT_EQ(dim(J(shape(3, 1), 3)), 3);
  EXPECT_EQ(dim(GModuleDecomp(shape(3, 1))), 0);
  const GroupShape s = shape(3, 1, 2, 1);
  EXPECT_EQ(dim(J(s, 2, 1) + J(s, 1, 0, 2)), 4);
}

TEST(GModuleDecomp, Rendering) {
  const GroupShape s = shape(3, 1, 2, 1);
  EXPECT_EQ((J(s, 3, 1, 2) + J(s, 2, 0)).str(), "J_3(ψ^1)^⊕2 ⊕ J_2(ψ^0)");
  EXPECT_EQ((J(s, 3, 1, 2) + J(s, 2, 0)).str(false), "J_3(psi^1)^2 + J_2(psi^0)");
  EXPECT_EQ((J(shape(3, 1), 1, 0, 2) + J(shape(3, 1), 3)).str(), "J_3 ⊕ J_1^⊕2");
  EXPECT_EQ(GModuleDecomp(s).str(), "0");
  EXPECT_THROW(J(s, 4), Error);
}

TEST(TFunctor, JordanBlockLayers) {
  for (Int l = 1; l <= 9; ++l)
    for (Int i = 1; i <= 9; ++i) EXPECT_EQ(t_functor(J(shape(3, 2), l), i).dim(), i <= l ? 1 : 0);
}

TEST(TFunctor, SingleLayerTwist) {
  for (Int a : {0, 1}) {
    const GroupShape s = shape(3, 1, 2, a);
    EXPECT_EQ(t_functor(J(s, 2, 0), 2), VirtualCModule::character(2, -a));
  }
  EXPECT_THROW(t_functor(J(shape(3, 1), 1), 4), Error);
  EXPECT_THROW(t_functor(J(shape(3, 1), 1), 0), Error);
}

TEST(TFunctor, TopLayerOfFreeModuleMatchesOracle) {
  for (const GroupShape& s : {shape(3, 1, 2, 1), shape(5, 1, 4, 1), shape(5, 1, 4, 3), shape(3, 2, 4, 2)}) {
    const Int h = s.h_order();
    const auto ctx = oracle::ShapeContext::make(s);
    const auto t = oracle::t_char_decomp(oracle::realize(ctx, 0, h));
    EXPECT_EQ(t_functor(J(s, h), h), t.back());
    EXPECT_EQ(t_functor(J(s, h), h), VirtualCModule::character(s.c, -(h - 1) * s.a_chi));
  }
}

TEST(TFunctor, MonotoneAndTwistCompatible) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const GroupShape s = gen::random_shape(rng, rng.uniform(0, 3), {2, 3, 5}, 8);
    const GModuleDecomp m = gen::random_gmodule(rng, s, 60);
    for (Int j = 1; j < s.h_order(); ++j) {
      const VirtualCModule cur = t_functor(m, j);
      const VirtualCModule next = t_functor(m, j + 1);
      EXPECT_GE(cur.dim(), next.dim());
      // the part of T^j coming from blocks longer than j twists into T^{j+1}
      GModuleDecomp longer(s);
      for (const auto& [key, mult] : m.mult())
        if (key.second > j) longer.add(key.first, key.second, mult);
      EXPECT_EQ(twist(t_functor(longer, j), -s.a_chi), next);
    }
  }
}

TEST(FromTData, HandExample) {
  const GroupShape s = shape(3, 1);
  const std::vector<VirtualCModule> t{VirtualCModule(1, {2}), VirtualCModule(1, {1}), VirtualCModule(1, {1})};
  EXPECT_EQ(from_t_data(s, t), J(s, 3) + J(s, 1));
}

TEST(FromTData, RejectsIncreasingLayers) {
  const GroupShape s = shape(3, 1);
  const std::vector<VirtualCModule> t{VirtualCModule(1, {1}), VirtualCModule(1, {2}), VirtualCModule(1, {0})};
  try {
    from_t_data(s, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentTData);
  }
  EXPECT_THROW(from_t_data(s, {VirtualCModule(1, {1})}), Error);
}

TEST(FromTData, ExhaustiveRoundTripSmallDims) {
  for (const auto& [s, max_d] : std::vector<std::pair<GroupShape, Int>>{
           {shape(2, 2), 30}, {shape(3, 1), 30}, {shape(2, 1), 30}, {shape(3, 1, 2, 1), 12}, {shape(5, 1, 4, 1), 8}}) {
    Int seen = 0;
    for (Int d = 0; d <= max_d; ++d)
      for_each_gmodule(s, d, [&](const GModuleDecomp& m) {
        ++seen;
        ASSERT_EQ(from_t_data(s, t_data(m)), m);
        ASSERT_EQ(dim(m), d);
      });
    EXPECT_GT(seen, 0);
  }
}

TEST(FromTData, RandomRoundTrip) {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const GroupShape s = gen::random_shape(rng, rng.uniform(0, 4), {2, 3, 5, 7}, 12);
    const GModuleDecomp m = gen::random_gmodule(rng, s, 400);
    const auto t = t_data(m);
    EXPECT_EQ(from_t_data(s, t), m);
    for (Int j = 1; j <= s.h_order(); ++j) EXPECT_EQ(t[static_cast<std::size_t>(j - 1)], t_functor(m, j));
  }
}

TEST(RestrictToC, Examples) {
  const GroupShape s = shape(3, 1, 2, 1);
  EXPECT_EQ(restrict_to_C(J(s, 1, 1)), VirtualCModule::character(2, 1));
  const VirtualCModule expected = VirtualCModule(2, {2, 1});
  EXPECT_EQ(restrict_to_C(J(s, 3, 0)), expected);
  // the oracle's eigenvalue count on the explicit module
  const auto ctx = oracle::ShapeContext::make(s);
  VirtualCModule counted(2);
  for (const auto& layer : oracle::t_char_decomp(oracle::realize(ctx, 0, 3))) counted = counted + layer;
  EXPECT_EQ(counted, expected);
}

TEST(RestrictToC, SumOfLayers) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const GroupShape s = gen::random_shape(rng, rng.uniform(0, 3), {2, 3, 5, 7}, 12);
    const GModuleDecomp m = gen::random_gmodule(rng, s, 200);
    VirtualCModule layers(s.c);
    for (const auto& t : t_data(m)) layers = layers + t;
    EXPECT_EQ(restrict_to_C(m), layers);
    EXPECT_EQ(restrict_to_C(m).dim(), dim(m));
  }
}

TEST(RestrictToHprime, Examples) {
  // n = 1: H' is trivial, only the dimension survives
  const GModuleDecomp r = restrict_to_Hprime(J(shape(3, 1), 3));
  EXPECT_EQ(r, J(shape(3, 0), 1, 0, 3));
  // p = 2, n = 2: J_4 restricted to <sigma^2>, cross-checked on matrices
  const GroupShape s = shape(2, 2);
  EXPECT_EQ(restrict_to_Hprime(J(s, 4)), J(shape(2, 1), 2, 0, 2));
  const auto ctx = oracle::ShapeContext::make(s);
  EXPECT_EQ(oracle::decompose(oracle::restrict_to_Hprime(oracle::realize(ctx, 0, 4))), J(shape(2, 1), 2, 0, 2));
  EXPECT_THROW(restrict_to_Hprime(J(shape(3, 0), 1)), Error);
}

TEST(RestrictToHprime, PreservesDimension) {
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    const GroupShape s = gen::random_shape(rng, rng.uniform(1, 4), {2, 3, 5}, 8);
    const GModuleDecomp m = gen::random_gmodule(rng, s, 300);
    EXPECT_EQ(dim(restrict_to_Hprime(m)), dim(m));
  }
}

TEST(ForgetC, Examples) {
  const GroupShape s = shape(5, 1, 4, 1);
  EXPECT_EQ(forget_C(J(s, 5, 2)), J(shape(5, 1), 5));
  const GModuleDecomp m = J(s, 5, 2) + J(s, 5, 3, 2) + J(s, 1, 1);
  EXPECT_EQ(forget_C(m), J(shape(5, 1), 5, 0, 3) + J(shape(5, 1), 1));
  EXPECT_EQ(dim(forget_C(m)), dim(m));
}

TEST(VirtualGModule, MaterializeReportsNegatives) {
  VirtualGModule v(shape(3, 1));
  v.add(0, 3, -2);
  v.add(0, 3, 2);
  v.add(0, 1, 1);
  EXPECT_EQ(v.materialize(), J(shape(3, 1), 1));
  v.add(0, 2, -1);
  try {
    v.materialize("test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeMultiplicity);
  }
}
