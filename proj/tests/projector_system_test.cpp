#include <gtest/gtest.h>

#include "generators.hpp"
#include "motkit/projector_system.hpp"

using namespace motkit;

namespace {

const CoefficientRing kZ = CoefficientRing::integers();

// {w, delta - w} on the algebra span{delta, w}, w∘w = w.
ProjectorSystem curve_model() {
  auto a = gen::split_algebra(2, kZ, "curve");
  const FreeElement w = a->element("e1");
  return ProjectorSystem(a, {{0, w}, {1, a->unit_element() - w}}, "C");
}

std::vector<std::string> verdicts(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks()) out.emplace_back(to_string(c.verdict));
  return out;
}

}  // namespace

TEST(ProjectorSystemTest, CurveModelPasses) {
  const ProjectorSystem c = curve_model();
  const VerificationReport r = verify_system(c);
  EXPECT_EQ(r.overall(), Verdict::Pass);
  // completeness + 2 idempotency + 2 orthogonality
  EXPECT_EQ(r.checks().size(), 5u);
  EXPECT_EQ(r.checks()[0].name, "Σ ϖ^i = one");
  EXPECT_EQ(c.max_degree(), 1);
  EXPECT_TRUE(c.projector(5).is_zero());
}

TEST(ProjectorSystemTest, DetectsEachAxiom) {
  auto a = gen::split_algebra(3, kZ);
  const FreeElement e1 = a->element("e1"), e2 = a->element("e2"), one = a->unit_element();
  // incomplete
  EXPECT_EQ(verify_system(ProjectorSystem(a, {{0, e1}, {1, e2}}, "x")).overall(), Verdict::Fail);
  // not idempotent
  const ProjectorSystem twice(a, {{0, Rational(2) * e1}, {1, one - Rational(2) * e1}}, "x");
  EXPECT_EQ(verify_system(twice).overall(), Verdict::Fail);
  // not orthogonal: e1 and one - e2 overlap ... sum must still be one
  const ProjectorSystem overlap(a, {{0, e1}, {1, one - e1 + e2}, {2, -e2}}, "x");
  const VerificationReport r = verify_system(overlap);
  EXPECT_EQ(r.checks()[0].verdict, Verdict::Pass);
  EXPECT_EQ(r.overall(), Verdict::Fail);
}

TEST(ProjectorSystemTest, RejectsNegativeDegreeAndForeignElements) {
  auto a = gen::split_algebra(2, kZ);
  EXPECT_THROW(ProjectorSystem(a, {{-1, a->unit_element()}}, "x"), InvalidStructure);
  EXPECT_THROW(ProjectorSystem(a, {{0, FreeElement::basis("zz", kZ)}}, "x"), UnsupportedSymbol);
  EXPECT_THROW(ProjectorSystem(nullptr, {}, "x"), PreconditionFailed);
}

TEST(ProjectorSystemTest, UnknownWhenTableIsPartial) {
  auto def = StructureAlgebra::Definition{};
  def.name = "partial";
  def.basis = {"one", "e"};
  def.unit = "one";
  auto a = std::make_shared<const StructureAlgebra>(def);
  const FreeElement e = a->element("e");
  const VerificationReport r = verify_system(ProjectorSystem(a, {{0, e}, {1, a->unit_element() - e}}, "x"));
  EXPECT_EQ(r.overall(), Verdict::Unknown);
  EXPECT_EQ(r.count(Verdict::Fail), 0u);
  for (const auto& c : r.exceptions()) EXPECT_EQ(join_pairs(c.missing), "e*e");
}

TEST(ProjectorSystemTest, RealizationTargets) {
  const ProjectorSystem c = curve_model();
  const std::vector<Slot> slots{{0, 1}, {1, 2}};
  const GradedRealization r(slots, {{"one", Matrix::identity(3)}, {"e1", kunneth_target(slots, 0)}});
  const VerificationReport v = verify_system(c, r);
  EXPECT_EQ(v.overall(), Verdict::Pass);
  EXPECT_EQ(v.checks().size(), 7u);
  const GradedRealization wrong(slots, {{"one", Matrix::identity(3)}, {"e1", kunneth_target(slots, 1)}});
  EXPECT_EQ(verify_system(c, wrong).overall(), Verdict::Fail);
}

TEST(ProjectorSystemTest, Decompose) {
  const ProjectorSystem c = curve_model();
  const FreeElement g = Rational(3) * c.algebra().unit_element() + Rational(2) * c.algebra().element("e1");
  FreeElement sum = c.algebra().zero();
  for (const auto& [d, part] : decompose_by_system(g, c)) sum += *part.value;
  EXPECT_EQ(sum, g);
}

TEST(ProjectorSystemTest, TensorSymbols) {
  EXPECT_EQ(tensor_symbol("a", "b"), "a⊗b");
  EXPECT_EQ(tensor_symbol(tensor_symbol("a", "b"), "c"), "(a⊗b)⊗c");
}

TEST(ProjectorSystemTest, TensorOfCurveModels) {
  const ProjectorSystem t = tensor_systems(curve_model(), curve_model());
  std::vector<int> degrees;
  for (const auto& [d, p] : t.projectors()) degrees.push_back(d);
  EXPECT_EQ(degrees, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(verify_system(t).overall(), Verdict::Pass);
  EXPECT_EQ(check_associativity(t.algebra()).overall(), Verdict::Pass);
  EXPECT_EQ(t.algebra().dimension(), 4u);
}

TEST(ProjectorSystemTest, TensorPreconditionsAndRings) {
  auto a = gen::split_algebra(2, kZ);
  const ProjectorSystem bad(a, {{0, a->element("e1")}}, "bad");
  EXPECT_THROW(tensor_systems(bad, curve_model()), PreconditionFailed);
  const auto q = gen::split_algebra(2, CoefficientRing::rationals());
  const ProjectorSystem over_q(q, {{0, q->unit_element()}}, "q");
  EXPECT_THROW(tensor_systems(curve_model(), over_q), RingMismatch);
}

TEST(ProjectorSystemTest, TensorRealization) {
  const std::vector<Slot> slots{{0, 1}, {1, 1}};
  const GradedRealization r(slots, {{"one", Matrix::identity(2)}, {"e1", kunneth_target(slots, 0)}});
  const GradedRealization rr = tensor_realizations(r, r);
  ASSERT_EQ(rr.slots().size(), 3u);
  EXPECT_EQ(rr.slots()[1].degree, 1);
  EXPECT_EQ(rr.slots()[1].rank, 2u);
  const ProjectorSystem t = tensor_systems(curve_model(), curve_model());
  EXPECT_EQ(verify_system(t, rr).overall(), Verdict::Pass);
  EXPECT_EQ(check_homomorphism(rr, t.algebra()).overall(), Verdict::Pass);
}

TEST(ProjectorSystemTest, ScaledTransportAndPushforward) {
  auto a = gen::split_algebra(3, kZ);
  LinearMap twice;
  for (const auto& s : a->basis()) twice.emplace(s, Rational(2) * a->element(s));
  EXPECT_EQ(scaled_transport_check(twice, 2, *a, *a).overall(), Verdict::Pass);
  EXPECT_EQ(scaled_transport_check(twice, 3, *a, *a).overall(), Verdict::Fail);

  gen::Rng rng(51);
  const ProjectorSystem sys = gen::split_system(rng, a, 3, 2);
  const ProjectorSystem pushed = pushforward_construct(sys, twice, 2, a);
  EXPECT_EQ(pushed.projectors(), sys.projectors());
  EXPECT_THROW(pushforward_construct(sys, twice, 3, a), PreconditionFailed);

  LinearMap lopsided = twice;
  lopsided["e1"] = a->element("e1");
  const ProjectorSystem e1_alone(a, {{0, a->element("e1")}, {1, a->unit_element() - a->element("e1")}}, "x");
  EXPECT_THROW(pushforward_construct(e1_alone, lopsided, 2, a), NotDivisible);
}

TEST(ProjectorSystemTest, StabilizeKeepsDegrees) {
  const ProjectorSystem c = curve_model();
  const ProjectorSystem s = stabilize_system(c);
  EXPECT_EQ(s.projectors().size(), c.projectors().size());
  EXPECT_EQ(s.projectors().begin()->first, 0);
  EXPECT_EQ(verdicts(verify_system(s)), verdicts(verify_system(c)));
}

// Properties.

TEST(ProjectorSystemProperty, RandomSplitSystemsPass) {
  gen::Rng rng(52);
  for (int k = 0; k < 60; ++k) {
    const int n = gen::uniform(rng, 1, 6);
    const auto a = gen::split_algebra(n, gen::ring(rng));
    const ProjectorSystem s = gen::split_system(rng, a, n, 4);
    EXPECT_EQ(verify_system(s).overall(), Verdict::Pass);
    for (int t = 0; t < 5; ++t) {
      const FreeElement g = gen::element(rng, *a);
      FreeElement sum = a->zero();
      for (const auto& [d, part] : decompose_by_system(g, s)) sum += *part.value;
      EXPECT_EQ(sum, g);
    }
  }
}

TEST(ProjectorSystemProperty, TensorOfPassingSystemsPasses) {
  gen::Rng rng(53);
  for (int k = 0; k < 25; ++k) {
    const auto ring = gen::ring(rng);
    const int n = gen::uniform(rng, 1, 4), m = gen::uniform(rng, 1, 4);
    const ProjectorSystem a = gen::split_system(rng, gen::split_algebra(n, ring, "a"), n, 3);
    const ProjectorSystem b = gen::split_system(rng, gen::split_algebra(m, ring, "b"), m, 3);
    const ProjectorSystem t = tensor_systems(a, b);
    EXPECT_EQ(verify_system(t).overall(), Verdict::Pass);
    EXPECT_EQ(t.max_degree(), a.max_degree() + b.max_degree());
  }
}

TEST(ProjectorSystemProperty, StabilizationPreservesVerdicts) {
  gen::Rng rng(54);
  for (int k = 0; k < 40; ++k) {
    const int n = gen::uniform(rng, 2, 5);
    const auto a = gen::split_algebra(n, kZ);
    std::map<int, FreeElement> ps;
    // Random, usually broken, systems: integer combinations of the basis.
    for (int d = 0; d < gen::uniform(rng, 1, 3); ++d) ps.emplace(d, gen::element(rng, *a, 2));
    const ProjectorSystem s(a, std::move(ps), "random");
    EXPECT_EQ(verdicts(verify_system(stabilize_system(s))), verdicts(verify_system(s)));
  }
}
