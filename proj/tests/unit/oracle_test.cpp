#include <gtest/gtest.h>

#include "equichar/oracle/matrix_module.hpp"
#include "equichar/oracle/selfcheck.hpp"
#include "generators.hpp"

using namespace equichar;
using namespace equichar::oracle;

TEST(GaloisField, SmallestSplittingDegree) {
  EXPECT_EQ(GaloisField::build(3, 2).r(), 1);
  EXPECT_EQ(GaloisField::build(3, 4).r(), 2);
  EXPECT_EQ(GaloisField::build(5, 8).r(), 2);
  EXPECT_EQ(GaloisField::build(2, 3).r(), 2);
  EXPECT_EQ(GaloisField::build(2, 1).q(), 2);
  EXPECT_THROW(GaloisField::build(3, 3), Error);
}

TEST(GaloisField, FieldAxioms) {
  for (auto [p, r] : std::vector<std::pair<Int, Int>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    const GaloisField F = GaloisField::of_degree(p, r);
    const auto q = static_cast<Elem>(F.q());
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      }
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        const Elem c = static_cast<Elem>((a * 7 + b * 3 + 1) % q);
        EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
    EXPECT_EQ(F.pow(F.generator(), F.q() - 1), 1u);
    for (Int d = 1; d < F.q() - 1; ++d)
      if ((F.q() - 1) % d == 0) {
        EXPECT_NE(F.pow(F.generator(), d), 1u) << p << "^" << r << " order " << d;
      }
  }
}

TEST(GaloisField, RootsOfUnity) {
  const GaloisField F = GaloisField::build(5, 8);
  const Elem z = F.root_of_unity(8);
  EXPECT_EQ(F.pow(z, 8), 1u);
  EXPECT_NE(F.pow(z, 4), 1u);
}

TEST(Matrix, RankKernelInverse) {
  const GaloisField F = GaloisField::of_degree(3, 1);
  Matrix a(3, 3);
  // rows (1 2 0), (2 1 0), (0 0 1): the first two are dependent mod 3
  a.at(0, 0) = 1; a.at(0, 1) = 2;
  a.at(1, 0) = 2; a.at(1, 1) = 1;
  a.at(2, 2) = 1;
  EXPECT_EQ(rank(F, a), 2);
  const Matrix k = kernel(F, a);
  EXPECT_EQ(k.cols(), 1);
  EXPECT_EQ(rank(F, mul(F, a, k)), 0);
  EXPECT_THROW(inverse(F, a), Error);

  Rng rng(5);
  for (Int d : {1, 4, 9}) {
    const Matrix g = random_invertible(F, d, rng);
    EXPECT_EQ(mul(F, g, inverse(F, g)), Matrix::identity(d));
  }
}

TEST(MatrixModule, RegularRepresentation) {
  const GroupShape s = GroupShape::make(3, 1, 2, 1);
  const ShapeContext ctx = ShapeContext::make(s);
  const MatrixModule reg = regular(ctx);
  EXPECT_EQ(reg.dim(), 6);
  EXPECT_NO_THROW(check_relations(reg));
  GModuleDecomp expected(s);
  expected.add(0, 3, 1);
  expected.add(1, 3, 1);
  EXPECT_EQ(decompose(reg), expected);
}

TEST(MatrixModule, RealizeEveryIndecomposable) {
  for (const GroupShape& s : oracle_shapes()) {
    const ShapeContext ctx = ShapeContext::make(s);
    for (Int l = 0; l < s.c; ++l)
      for (Int i = 1; i <= s.h_order(); ++i) {
        const MatrixModule m = realize(ctx, l, i);
        ASSERT_NO_THROW(check_relations(m));
        EXPECT_EQ(decompose(m), GModuleDecomp::indecomposable(s, l, i));
      }
  }
}

TEST(MatrixModule, DirectSumsAreAdditive) {
  const GroupShape s = GroupShape::make(5, 1, 4, 1);
  const ShapeContext ctx = ShapeContext::make(s);
  const MatrixModule a = realize(ctx, 1, 3);
  const MatrixModule b = realize(ctx, 2, 5);
  EXPECT_EQ(decompose(direct_sum(a, b)), decompose(a) + decompose(b));
}

TEST(MatrixModule, BrokenRelationIsReported) {
  const ShapeContext ctx = ShapeContext::make(GroupShape::make(3, 1, 2, 1));
  MatrixModule m = realize(ctx, 0, 2);
  m.R = Matrix::identity(2);  // commutes with S, but x = 2 requires R S R^-1 = S^2
  try {
    check_relations(m);
    FAIL() << "expected a relation failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RelationCheckFailed);
  }
}

TEST(MatrixModule, ShapeLimits) {
  EXPECT_THROW(ShapeContext::make(GroupShape::make(2, 11)), Error);
  const ShapeContext ctx = ShapeContext::make(GroupShape::make(3, 1), 4);
  EXPECT_THROW(regular(ShapeContext::make(GroupShape::make(3, 2), 4)), Error);
  EXPECT_NO_THROW(realize(ctx, 0, 3));
}

TEST(Selfcheck, SmallRunPasses) {
  SelfcheckConfig cfg;
  cfg.count = 10;
  cfg.sample_dim = 40;
  const SelfcheckReport r = run_selfcheck(cfg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.suites.size(), 9u);
  for (const auto& s : r.suites) EXPECT_GT(s.cases, 0) << s.name;
}
