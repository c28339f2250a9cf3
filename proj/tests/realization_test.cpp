#include <gtest/gtest.h>

#include "generators.hpp"
#include "motkit/realization.hpp"

using namespace motkit;

TEST(RealizationTest, KunnethTarget) {
  const std::vector<Slot> slots{{0, 1}, {2, 2}, {4, 0}};
  const Matrix t = kunneth_target(slots, 2);
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t(0, 0), 0);
  EXPECT_EQ(t(1, 1), 1);
  EXPECT_EQ(t(2, 2), 1);
  EXPECT_EQ(kunneth_target(slots, 7), Matrix(3, 3));
  EXPECT_EQ(kunneth_target(slots, 4), Matrix(3, 3));
}

TEST(RealizationTest, ValidatesShapes) {
  const std::vector<Slot> slots{{0, 1}, {1, 1}};
  EXPECT_THROW(GradedRealization({{0, 1}, {0, 1}}, {}), InvalidStructure);
  EXPECT_THROW(GradedRealization(slots, {{"a", Matrix(3, 3)}}), InvalidStructure);
  EXPECT_THROW(GradedRealization(slots, {{"a", Matrix(2, 2, {1, 1, 0, 1})}}), InvalidStructure);
  EXPECT_NO_THROW(GradedRealization(slots, {{"a", Matrix(2, 2, {1, 0, 0, 3})}}));
  const GradedRealization r(slots, {});
  EXPECT_THROW(r.image("a"), UnsupportedSymbol);
}

TEST(RealizationTest, HomomorphismOnSplitAlgebra) {
  const auto a = gen::split_algebra(3, CoefficientRing::integers());
  const std::vector<Slot> slots{{0, 1}, {1, 2}, {2, 1}};
  // e1 -> slot 0, e2 -> slot 1, remainder -> slot 2
  const GradedRealization r(slots, {{"one", scalar_blocks(slots, {{0, 1}, {1, 1}, {2, 1}})},
                                    {"e1", scalar_blocks(slots, {{0, 1}})},
                                    {"e2", scalar_blocks(slots, {{1, 1}})}});
  const VerificationReport h = check_homomorphism(r, *a);
  EXPECT_EQ(h.overall(), Verdict::Pass);
  EXPECT_EQ(realize(gen::primitive(*a, 3, 3), r), kunneth_target(slots, 2));

  const GradedRealization bad(slots, {{"one", Matrix::identity(4)},
                                      {"e1", scalar_blocks(slots, {{0, 1}})},
                                      {"e2", scalar_blocks(slots, {{0, 1}})}});
  EXPECT_EQ(check_homomorphism(bad, *a).overall(), Verdict::Fail);
}

TEST(RealizationTest, MissingImageIsAnError) {
  const auto a = gen::split_algebra(2, CoefficientRing::integers());
  const std::vector<Slot> slots{{0, 1}};
  const GradedRealization r(slots, {{"one", Matrix::identity(1)}});
  EXPECT_THROW(check_homomorphism(r, *a), UnsupportedSymbol);
}

TEST(RealizationProperty, RealizeIsLinear) {
  gen::Rng rng(41);
  const auto a = gen::split_algebra(4, CoefficientRing::rationals());
  const std::vector<Slot> slots{{0, 1}, {1, 1}, {2, 2}};
  std::map<Symbol, Matrix> images;
  for (const auto& s : a->basis()) {
    std::map<int, Rational> sc;
    for (int d = 0; d <= 2; ++d) sc.emplace(d, gen::rational(rng, 5, 3));
    images.emplace(s, scalar_blocks(slots, sc));
  }
  const GradedRealization r(slots, images);
  for (int k = 0; k < 100; ++k) {
    const FreeElement x = gen::element(rng, *a), y = gen::element(rng, *a);
    const Rational c = gen::rational(rng);
    EXPECT_EQ(realize(x + c * y, r), realize(x, r) + c * realize(y, r));
  }
}
