#include <gtest/gtest.h>

#include "generators.hpp"
#include "motkit/algebra.hpp"

using namespace motkit;

namespace {

StructureAlgebra::Definition upper_triangular() {
  // 2x2 upper triangular matrices: one, a = E11, n = E12.
  const auto z = CoefficientRing::integers();
  StructureAlgebra::Definition def;
  def.name = "T2";
  def.ring = z;
  def.basis = {"one", "a", "n"};
  def.unit = "one";
  def.products = {
      {{"a", "a"}, FreeElement::basis("a", z)},
      {{"a", "n"}, FreeElement::basis("n", z)},
      {{"n", "a"}, FreeElement(z)},
      {{"n", "n"}, FreeElement(z)},
  };
  return def;
}

}  // namespace

TEST(AlgebraTest, UnitProductsAreImplicit) {
  const StructureAlgebra t(upper_triangular());
  ASSERT_NE(t.product("one", "n"), nullptr);
  EXPECT_EQ(*t.product("n", "one"), t.element("n"));
  EXPECT_EQ(t.defined_pair_count(), 9u);
  EXPECT_EQ(t.declared_products().size(), 4u);
}

TEST(AlgebraTest, ValidationRejectsBadDefinitions) {
  auto def = upper_triangular();
  def.unit = "u";
  EXPECT_THROW(StructureAlgebra{def}, InvalidStructure);

  def = upper_triangular();
  def.basis.push_back("a");
  EXPECT_THROW(StructureAlgebra{def}, InvalidStructure);

  def = upper_triangular();
  def.products.emplace(std::pair{"a", "x"}, FreeElement(def.ring));
  EXPECT_THROW(StructureAlgebra{def}, InvalidStructure);

  def = upper_triangular();
  def.products[{"a", "a"}] = FreeElement::basis("zz", def.ring);
  EXPECT_THROW(StructureAlgebra{def}, InvalidStructure);

  def = upper_triangular();
  def.products[{"a", "a"}] = Rational(1, 2) * FreeElement::basis("a", CoefficientRing::rationals());
  EXPECT_THROW(StructureAlgebra{def}, RingViolation);

  def = upper_triangular();
  def.involution = Involution{{"one", "one"}, {"a", "n"}, {"n", "n"}};
  EXPECT_THROW(StructureAlgebra{def}, InvalidStructure);

  def = upper_triangular();
  def.involution = Involution{{"one", "a"}, {"a", "one"}, {"n", "n"}};
  EXPECT_THROW(StructureAlgebra{def}, InvalidStructure);
}

TEST(AlgebraTest, ComposeIsBilinear) {
  const StructureAlgebra t(upper_triangular());
  const FreeElement x = t.element("one") + Rational(2) * t.element("a");
  const FreeElement y = t.element("a") - t.element("n");
  const CompositionResult r = compose(x, y, t);
  ASSERT_TRUE(r.known());
  // (1 + 2a)(a - n) = a - n + 2a - 2n
  EXPECT_EQ(r.value->to_string(), "3*a - 3*n");
}

TEST(AlgebraTest, AbsentPairIsUnknownNotZero) {
  auto def = upper_triangular();
  def.products.erase({"n", "a"});
  const StructureAlgebra t(def);
  EXPECT_EQ(t.product("n", "a"), nullptr);
  const CompositionResult r = compose(t.element("n") + t.element("one"), t.element("a"), t);
  EXPECT_FALSE(r.known());
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0].to_string(), "n*a");

  const VerificationReport assoc = check_associativity(t);
  EXPECT_EQ(assoc.count(Verdict::Fail), 0u);
  EXPECT_GT(assoc.count(Verdict::Unknown), 0u);
  EXPECT_EQ(assoc.overall(), Verdict::Unknown);
  for (const auto& c : assoc.exceptions()) {
    EXPECT_EQ(c.verdict, Verdict::Unknown);
    EXPECT_EQ(join_pairs(c.missing), "n*a");
  }
}

TEST(AlgebraTest, AssociativityDetectsBrokenTable) {
  auto def = upper_triangular();
  def.products[{"n", "a"}] = FreeElement::basis("a", def.ring);
  const VerificationReport report = check_associativity(StructureAlgebra(def));
  EXPECT_EQ(report.overall(), Verdict::Fail);
  const auto ex = report.exceptions();
  ASSERT_FALSE(ex.empty());
  EXPECT_FALSE(ex[0].lhs.empty());
  EXPECT_NE(ex[0].lhs, ex[0].rhs);
}

TEST(AlgebraTest, CommutativityAudit) {
  const StructureAlgebra t(upper_triangular());
  const VerificationReport r = check_commutativity(t);
  EXPECT_EQ(r.checks().size(), 3u);
  EXPECT_EQ(r.count(Verdict::Fail), 1u);
  EXPECT_EQ(r.exceptions()[0].name, "a∘n = n∘a");
}

TEST(AlgebraTest, TransposeNeedsInvolution) {
  const StructureAlgebra t(upper_triangular());
  EXPECT_THROW(transpose(t.element("a"), t), PreconditionFailed);
  EXPECT_THROW(check_transpose_antiautomorphism(t), PreconditionFailed);
}

TEST(AlgebraTest, MembershipChecks) {
  const StructureAlgebra t(upper_triangular());
  EXPECT_THROW(t.element("q"), UnsupportedSymbol);
  EXPECT_THROW(t.require_member(FreeElement::basis("a", CoefficientRing::rationals())), RingMismatch);
  EXPECT_THROW(compose(FreeElement::basis("q", t.ring()), t.element("a"), t), UnsupportedSymbol);
}

TEST(AlgebraTest, CompareTables) {
  auto def = upper_triangular();
  const StructureAlgebra a(def);
  EXPECT_EQ(compare_tables(a, a).overall(), Verdict::Pass);
  def.products.erase({"n", "n"});
  const StructureAlgebra b(def);
  const VerificationReport r = compare_tables(a, b);
  EXPECT_EQ(r.count(Verdict::Fail), 1u);
  EXPECT_EQ(r.exceptions()[0].rhs, "undefined");
}

// Properties.

TEST(AlgebraProperty, MonoidAlgebrasAreAssociative) {
  gen::Rng rng(31);
  int noncommutative = 0;
  for (int k = 0; k < 40; ++k) {
    const auto a = gen::transformation_monoid_algebra(rng, 3, gen::uniform(rng, 1, 2));
    const VerificationReport assoc = check_associativity(*a);
    EXPECT_EQ(assoc.overall(), Verdict::Pass) << a->dimension();
    EXPECT_EQ(assoc.checks().size(), a->dimension() * a->dimension() * a->dimension());
    if (check_commutativity(*a).overall() == Verdict::Fail) ++noncommutative;
  }
  EXPECT_GT(noncommutative, 5);
}

TEST(AlgebraProperty, ComposeAssociativeOnRandomElements) {
  gen::Rng rng(32);
  for (int k = 0; k < 60; ++k) {
    const auto a = gen::transformation_monoid_algebra(rng, 3, 2, 7);
    const FreeElement x = gen::element(rng, *a), y = gen::element(rng, *a), z = gen::element(rng, *a);
    const auto xy = compose(x, y, *a), yz = compose(y, z, *a);
    const auto left = compose(*xy.value, z, *a), right = compose(x, *yz.value, *a);
    EXPECT_EQ(*left.value, *right.value);
  }
}

TEST(AlgebraProperty, PartialTablesNeverFail) {
  gen::Rng rng(33);
  for (int k = 0; k < 40; ++k) {
    const auto full = gen::transformation_monoid_algebra(rng, 3, 2, 6);
    const auto partial = gen::drop_products(rng, *full, gen::uniform(rng, 10, 60));
    const VerificationReport r = check_associativity(*partial);
    EXPECT_EQ(r.count(Verdict::Fail), 0u);
    EXPECT_EQ(r.checks().size(), full->dimension() * full->dimension() * full->dimension());
    for (const auto& c : r.checks()) {
      if (c.verdict != Verdict::Unknown) continue;
      ASSERT_FALSE(c.missing.empty());
      for (const auto& p : c.missing) EXPECT_EQ(partial->product(p.left, p.right), nullptr);
    }
  }
}

TEST(AlgebraProperty, GroupAlgebraTransposeIsAntiAutomorphism) {
  gen::Rng rng(34);
  for (int n = 1; n <= 7; ++n) {
    const auto a = gen::cyclic_group_algebra(n, gen::ring(rng));
    EXPECT_EQ(check_transpose_antiautomorphism(*a).overall(), Verdict::Pass);
    EXPECT_EQ(check_commutativity(*a).overall(), Verdict::Pass);
    for (int k = 0; k < 20; ++k) {
      const FreeElement x = gen::element(rng, *a), y = gen::element(rng, *a);
      EXPECT_EQ(transpose(*compose(x, y, *a).value, *a),
                *compose(transpose(y, *a), transpose(x, *a), *a).value);
      EXPECT_EQ(transpose(transpose(x, *a), *a), x);
    }
  }
}
