#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "motkit/hilb_s2.hpp"

using namespace motkit;

namespace {

std::set<SymbolPair> all_mixed_pairs(const StructureAlgebra& a) {
  std::set<SymbolPair> out;
  for (const auto& x : a.basis()) {
    for (const auto& y : a.basis()) {
      if (is_transpose_mixed({x, y})) out.insert({x, y});
    }
  }
  return out;
}

std::set<SymbolPair> missing_pairs(const VerificationReport& r) {
  std::set<SymbolPair> out;
  for (const auto& c : r.checks()) out.insert(c.missing.begin(), c.missing.end());
  return out;
}

}  // namespace

TEST(S2Test, StatedTable) {
  const auto table = s2_stated_table();
  EXPECT_EQ(table.size(), 16u);
  const VerificationReport r = s2_table_check();
  EXPECT_EQ(r.overall(), Verdict::Pass);
  EXPECT_EQ(r.count(Verdict::Pass), 16u);
  const auto a = s2_algebra();
  EXPECT_EQ(a->product("G4", "G4")->to_string(), "-G4");
  EXPECT_EQ(a->product("G1", "G1")->to_string(), "G1 + 2*G2 + 2*G3");
  EXPECT_EQ(*a->product("G1", "G2"), *a->product("G2", "G1"));
}

TEST(S2Test, TransposeDerivedEntries) {
  const auto a = s2_algebra();
  ASSERT_NE(a->product("G2t", "G1t"), nullptr);
  EXPECT_EQ(a->product("G2t", "G1t")->to_string(), "2*G2t");
  EXPECT_EQ(a->product("G1", "G1t"), nullptr);
  const CompositionResult r = compose(a->element("G1"), a->element("G1t"), *a);
  EXPECT_FALSE(r.known());
  EXPECT_EQ(join_pairs(r.missing), "G1*G1t");
  EXPECT_EQ(transpose(a->element("G1") - Rational(2) * a->element("G2"), *a).to_string(), "G1t - 2*G2t");
  EXPECT_EQ(transpose(a->element("G3"), *a), a->element("G3"));
  EXPECT_EQ(a->dimension(), 8u);
}

TEST(S2Test, MixedClassification) {
  EXPECT_TRUE(is_transpose_mixed({"G1", "G2t"}));
  EXPECT_TRUE(is_transpose_mixed({"G4t", "G2"}));
  EXPECT_FALSE(is_transpose_mixed({"G3", "G1t"}));
  EXPECT_FALSE(is_transpose_mixed({"G1t", "G2t"}));
  EXPECT_FALSE(is_transpose_mixed({"delta", "G1t"}));
  EXPECT_EQ(all_mixed_pairs(*s2_algebra()).size(), 18u);
}

TEST(S2Test, UndefinedPairsAreExactlyTheMixedOnes) {
  const auto a = s2_algebra();
  for (const auto& x : a->basis()) {
    for (const auto& y : a->basis()) {
      EXPECT_EQ(a->product(x, y) == nullptr, is_transpose_mixed({x, y})) << x << "*" << y;
    }
  }
}

TEST(S2Test, PureTensorCrossCheck) {
  const VerificationReport r = cross_check_pure_tensors();
  EXPECT_EQ(r.count(Verdict::Fail), 0u);
  EXPECT_EQ(r.count(Verdict::Pass), 13u);
  EXPECT_EQ(r.count(Verdict::Unknown), 3u);
}

TEST(S2Test, ProjectorSystem) {
  const ProjectorSystem s = s2_projectors();
  EXPECT_EQ(s.projector(0).to_string(), "G2");
  EXPECT_EQ(s.projector(2).to_string(), "G1 - 2*G2 - 2*G3 - G4");
  EXPECT_EQ(s.projector(8).to_string(), "G2t");
  EXPECT_EQ(s.projector(6).to_string(), "G1t - 2*G2t - 2*G3 - G4t");
  const VerificationReport r = verify_system(s);
  EXPECT_EQ(r.count(Verdict::Fail), 0u);
  EXPECT_EQ(r.overall(), Verdict::Unknown);
  std::map<std::string, Verdict> by_name;
  for (const auto& c : r.checks()) by_name[c.name] = c.verdict;
  EXPECT_EQ(by_name.at("Σ ϖ^i = delta"), Verdict::Pass);
  for (int d : {0, 2, 6, 8}) {
    const std::string p = "ϖ^" + std::to_string(d);
    EXPECT_EQ(by_name.at(p + "∘" + p + " = " + p), Verdict::Pass) << p;
  }
  EXPECT_EQ(by_name.at("ϖ^0∘ϖ^2 = 0"), Verdict::Pass);
  EXPECT_EQ(by_name.at("ϖ^2∘ϖ^0 = 0"), Verdict::Pass);
  EXPECT_EQ(by_name.at("ϖ^8∘ϖ^6 = 0"), Verdict::Pass);
  EXPECT_EQ(by_name.at("ϖ^2∘ϖ^6 = 0"), Verdict::Unknown);
  for (const auto& p : missing_pairs(r)) EXPECT_TRUE(is_transpose_mixed(p)) << p.to_string();
}

TEST(S2Test, Audits) {
  EXPECT_EQ(check_associativity(*s2_plain_algebra()).overall(), Verdict::Pass);
  const VerificationReport assoc = check_associativity(*s2_algebra());
  EXPECT_EQ(assoc.count(Verdict::Fail), 0u);
  const auto unknown = missing_pairs(assoc);
  EXPECT_EQ(unknown, all_mixed_pairs(*s2_algebra()));
  const VerificationReport t = check_transpose_antiautomorphism(*s2_algebra());
  EXPECT_EQ(t.count(Verdict::Fail), 0u);
  EXPECT_EQ(t.count(Verdict::Unknown), 18u);
}

TEST(LatticeTest, BuiltinGrams) {
  const LatticeGram k3 = k3_gram("K3");
  EXPECT_EQ(k3.rank(), 22u);
  EXPECT_EQ(k3.extended.rows(), 23u);
  EXPECT_EQ(k3.extended(22, 22), -1);
  EXPECT_EQ(k3.gram.determinant(), -1);
  EXPECT_EQ(k3_gram("E8minus").gram.determinant(), 1);
  EXPECT_EQ(k3_gram("U").gram.determinant(), -1);
  EXPECT_THROW(k3_gram("K4"), InvalidStructure);
  // each E8 block contributes -16 to the trace
  Rational trace = 0;
  for (std::size_t k = 0; k < 22; ++k) trace += k3.gram(k, k);
  EXPECT_EQ(trace, -32);
}

TEST(LatticeTest, Pi2Check) {
  for (const char* name : {"K3", "U", "E8minus"}) {
    const VerificationReport r = pi2_cohomology_check(k3_gram(name));
    EXPECT_EQ(r.overall(), Verdict::Pass) << name;
    EXPECT_EQ(r.checks().size(), 3u);
  }
  EXPECT_THROW(lattice_from_gram(Matrix(2, 2, {1, 2, 3, 4})), InvalidStructure);
  EXPECT_THROW(lattice_from_gram(Matrix(1, 1, {Rational(1, 2)})), InvalidStructure);
  EXPECT_THROW(pi2_cohomology_check(lattice_from_gram(Matrix(2, 2, {1, 1, 1, 1}))), InvalidStructure);
}

TEST(LatticeProperty, RandomNondegenerateGrams) {
  // Non-unimodular forms still give B·A = I over Q.
  gen::Rng rng(71);
  int tested = 0;
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    Matrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r; c < n; ++c) g(r, c) = g(c, r) = gen::uniform(rng, -3, 3);
    }
    if (g.determinant() == 0) continue;
    ++tested;
    EXPECT_EQ(pi2_cohomology_check(lattice_from_gram(g)).overall(), Verdict::Pass);
  }
  EXPECT_GT(tested, 20);
}
