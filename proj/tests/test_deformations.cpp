#include <gtest/gtest.h>

#include "homlie/deformations.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/theorem_suite.hpp"

using namespace homlie;

namespace {

/// Random D_φ-cocycle in degree 1: a valid first-order term.
SkewCochain first_order_term(const HomMorphism& phi, std::uint64_t seed) {
  const auto cx = CochainComplex::morphism(phi);
  suite::Rng rng(seed);
  SkewCochain t(cx.domain(), cx.codomain(), 1);
  const auto& b = cx.basis(1);
  for (const auto& k : kernel_basis(cx.differential_matrix(1))) {
    SkewCochain z(cx.domain(), cx.codomain(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) z += k[i] * b[i];
    t += Scalar(rng.uniform(1, 3)) * z;
  }
  return t;
}

std::vector<std::pair<std::string, HomMorphism>> h2_free_morphisms() {
  return {
      {"sl2 id", HomMorphism(fixtures::sl2(), fixtures::sl2(), Mat::identity(3))},
      {"yau-sl2 id", HomMorphism(fixtures::yau_sl2(), fixtures::yau_sl2(), Mat::identity(3))},
      {"yau-gl2 id", HomMorphism(fixtures::yau_gl2(), fixtures::yau_gl2(), Mat::identity(4))},
      {"fixture-b zero", HomMorphism(fixtures::fixture_b(), fixtures::fixture_b(), Mat(3, 3))},
  };
}

}  // namespace

TEST(Deformation, MorphismCohomologyHasNoDegreeTwo) {
  for (const auto& [name, phi] : h2_free_morphisms()) EXPECT_EQ(CochainComplex::morphism(phi).cohomology(2).dim_H(), 0u) << name;
}

TEST(Deformation, ExtendsToOrderFourWhenH2Vanishes) {
  for (const auto& [name, phi] : h2_free_morphisms()) {
    const auto t1 = first_order_term(phi, 12);
    MorphismDeformation d(phi, {t1});
    ASSERT_TRUE(check_order_deformation(d)) << name;
    const auto cx = CochainComplex::morphism(phi);
    while (d.order() < 4) {
      const auto ob = obstruction(d);
      EXPECT_TRUE(cx.apply(ob.cocycle).is_zero()) << name;
      ASSERT_TRUE(ob.is_coboundary()) << name << " order " << d.order();
      const auto next = extend(d);
      ASSERT_TRUE(next) << name;
      EXPECT_EQ(d_phi(next->terms.back(), phi), ob.cocycle) << name;
      d = *next;
      // round trip: rebuild from the terms and validate independently
      MorphismDeformation rebuilt(phi, std::vector<SkewCochain>(d.terms.begin() + 1, d.terms.end()));
      EXPECT_TRUE(check_order_deformation(rebuilt)) << name << " order " << d.order();
    }
    EXPECT_EQ(d.order(), 4u);
  }
}

TEST(Deformation, NontrivialFirstOrderGivesNonzeroObstruction) {
  const HomMorphism phi(fixtures::sl2(), fixtures::sl2(), Mat::identity(3));
  MorphismDeformation d(phi, {first_order_term(phi, 12)});
  EXPECT_FALSE(obstruction_cocycle(d).is_zero());
}

TEST(Deformation, OrderEquationPointwiseOracle) {
  // φ_t = id + t·ad_h on sl2, checked against Σ_{i+j=n}[φ_i x, φ_j y] by hand at order 1
  const auto g = fixtures::sl2();
  const HomMorphism phi(g, g, Mat::identity(3));
  SkewCochain adh(g.space(), g.space(), 1);
  for (std::size_t i = 0; i < 3; ++i) adh.coeff(i) = g.bracket_basis(1, i);
  MorphismDeformation d(phi, {adh});
  EXPECT_TRUE(check_order_deformation(d));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = x + 1; y < 3; ++y)
      EXPECT_EQ(adh({g.bracket_basis(x, y)}), g.bracket(adh.coeff(x), Vec::unit(3, y)) + g.bracket(Vec::unit(3, x), adh.coeff(y)));
}

TEST(Deformation, ObstructionIsCocycleEvenWhenH2IsNonzero) {
  const auto B = fixtures::fixture_b();
  const HomMorphism phi(B, B, Mat::identity(3));
  const auto cx = CochainComplex::morphism(phi);
  EXPECT_EQ(cx.cohomology(2).dim_H(), 1u);
  MorphismDeformation d(phi, {first_order_term(phi, 3)});
  for (int k = 0; k < 3; ++k) {
    const auto ob = obstruction(d);
    EXPECT_TRUE(cx.apply(ob.cocycle).is_zero());
    const auto next = extend(d);
    if (!next) {
      EXPECT_FALSE(ob.is_coboundary());
      break;
    }
    d = *next;
  }
}

TEST(Deformation, InvalidTermsRejected) {
  const auto g = fixtures::sl2();
  const HomMorphism phi(g, g, Mat::identity(3));
  SkewCochain bad(g.space(), g.space(), 1);
  bad.coeff(0) = Vec{0, 1, 0};  // e ↦ h is not a derivation
  MorphismDeformation d(phi, {bad});
  const auto w = find_deformation_failure(d);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->axiom, "order 1 equation");
  EXPECT_THROW(obstruction(d), UsageError);
  EXPECT_THROW(MorphismDeformation(phi, {SkewCochain(g.space(), g.space(), 2)}), UsageError);
}

TEST(Deformation, TwistIncompatibleTermRejected) {
  const auto B = fixtures::fixture_b();
  const HomMorphism phi(B, B, Mat(3, 3));
  SkewCochain t(B.space(), B.space(), 1);
  t.coeff(0) = Vec{0, 1, 0};  // eigenvalue 1 ↦ 2
  const auto w = find_deformation_failure(MorphismDeformation(phi, {t}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->axiom, "twist compatibility of term 1");
}

TEST(Deformation, BaseMustBeMorphism) {
  const auto B = fixtures::fixture_b();
  const HomMorphism phi(B, B, Scalar(2) * Mat::identity(3));
  const auto w = find_deformation_failure(MorphismDeformation(phi));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->axiom, "bracket preservation");
}
