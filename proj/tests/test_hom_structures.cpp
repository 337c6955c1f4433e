#include <gtest/gtest.h>

#include "homlie/brackets.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/operators.hpp"
#include "homlie/structures.hpp"
#include "homlie/theorem_suite.hpp"

using namespace homlie;

namespace {

const Witness* failure_at(const std::vector<Witness>& ws, const std::string& a, const std::string& b) {
  for (const auto& w : ws)
    if (w.labels.size() == 2 && w.labels[0] == a && w.labels[1] == b) return &w;
  return nullptr;
}

}  // namespace

TEST(Jackson, QTwoFailsMultiplicativityWithPaperValues) {
  const auto j = fixtures::jackson_sl2(2);
  EXPECT_TRUE(check_hom_jacobi(j));
  const auto fails = multiplicativity_failures(j);
  EXPECT_FALSE(fails.empty());
  const Witness* ef = failure_at(fails, "e", "f");
  ASSERT_NE(ef, nullptr);
  EXPECT_EQ(ef->lhs, (Vec{0, 3, 0}));   // α([e,f]) = q(1+q)/2 h
  EXPECT_EQ(ef->rhs, (Vec{0, 12, 0}));  // [αe,αf] = q³(1+q)/2 h
  EXPECT_EQ(ef->describe(), "multiplicativity fails at (e,f): 3·h vs 12·h");
}

TEST(Jackson, QOneIsClassicalSl2) {
  const auto j = fixtures::jackson_sl2(1);
  EXPECT_TRUE(check_hom_jacobi(j));
  EXPECT_TRUE(check_multiplicative(j));
  EXPECT_EQ(j.mu.flatten(), fixtures::sl2().mu().flatten());
  EXPECT_EQ(j.space->twist(), Mat::identity(3));
}

TEST(Jackson, HomJacobiForOtherQ) {
  for (const Scalar& q : {Scalar(3), Scalar(-1, 2), Scalar(5, 3)}) {
    const auto j = fixtures::jackson_sl2(q);
    EXPECT_TRUE(check_hom_jacobi(j)) << q;
    const auto fails = multiplicativity_failures(j);
    const Witness* ef = failure_at(fails, "e", "f");
    ASSERT_NE(ef, nullptr);
    EXPECT_EQ(ef->lhs[1], q * (1 + q) / 2);
    EXPECT_EQ(ef->rhs[1], q * q * q * (1 + q) / 2);
  }
}

TEST(ThreeDim, HomJacobiForRandomParameters) {
  suite::Rng rng(2024);
  for (int t = 0; t < 20; ++t) {
    auto r = [&]() -> Scalar { return Scalar(rng.uniform(-9, 9)) / rng.uniform(1, 5); };
    const Scalar a = r(), b = r(), c = r(), d = r();
    EXPECT_TRUE(check_hom_jacobi(fixtures::threedim(a, b, c, d))) << a << " " << b << " " << c << " " << d;
  }
}

TEST(ThreeDim, MultiplicativeExactlyWhenAAndDVanish) {
  for (int a = 0; a <= 1; ++a)
    for (int d = 0; d <= 1; ++d)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          EXPECT_EQ(check_multiplicative(fixtures::threedim(a, b, c, d)), a == 0 && d == 0) << a << b << c << d;
}

TEST(ThreeDim, InvalidStructureRejectedByConstructor) {
  EXPECT_THROW(HomLieAlgebra(fixtures::threedim(1, 0, 0, 0)), StructureError);
}

TEST(Structures, HomJacobiWitnessOnCorruptedBracket) {
  // sl2 with [e,f] = e + h: the e,h,f cyclic sum is -2e
  auto space = make_space(Mat::identity(3), {"e", "h", "f"});
  auto mu = bracket_from_entries(space, {{0, 1, Vec{-2, 0, 0}}, {0, 2, Vec{0, 1, 0}}, {1, 2, Vec{0, 0, -2}}, {0, 2, Vec{1, 0, 0}}});
  const auto w = find_hom_jacobi_failure(RawHomStructure(space, mu));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->labels, (std::vector<std::string>{"e", "h", "f"}));
  EXPECT_EQ(w->lhs, (Vec{-2, 0, 0}));
}

TEST(Structures, AbelianAlgebraIsHomLie) {
  const auto a = fixtures::abelian(3, Mat::diagonal({1, 2, 3}));
  EXPECT_TRUE(a.mu().is_zero());
  EXPECT_THROW(fixtures::abelian(2, Mat::identity(3)), UsageError);
}

TEST(Structures, YauTwistsAreMultiplicative) {
  for (const auto& g : {fixtures::yau_sl2(), fixtures::yau_heisenberg(), fixtures::yau_gl2()}) {
    EXPECT_TRUE(check_multiplicative(g.raw()));
    EXPECT_TRUE(check_hom_jacobi(g.raw()));
  }
  const auto y = fixtures::yau_sl2();
  EXPECT_EQ(y.bracket_basis(0, 2), (Vec{0, 1, 0}));  // α[e,f] = αh = h
  EXPECT_EQ(y.bracket_basis(0, 1), (Vec{-4, 0, 0}));  // α(-2e) = -4e
}

TEST(Structures, YauTwistRejectsNonAutomorphism) {
  EXPECT_THROW(yau_twist(fixtures::sl2().mu(), Mat::diagonal({2, 1, 1})), UsageError);
}

TEST(Structures, CommutatorOfMatrixAlgebra) {
  // M2 on E11,E12,E21,E22
  BilinearMap prod(4, 4, 4);
  auto idx = [](int r, int c) { return static_cast<std::size_t>(2 * r + c); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (b == c) prod.on_basis(idx(a, b), idx(c, d)) = Vec::unit(4, idx(a, d));
  const auto lie = commutator_hom_lie(prod, Mat::identity(4));
  EXPECT_TRUE(check_hom_jacobi(lie));
  EXPECT_EQ(lie.bracket_basis(1, 2), (Vec{1, 0, 0, -1}));  // [E12,E21] = E11 - E22
  // twisting the product by conjugation with diag(1,2) lands on the gl2 fixture
  const Mat a = Mat::diagonal({1, Scalar(1, 2), 2, 1});
  BilinearMap tw(4, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) tw.on_basis(i, j) = a * prod.on_basis(i, j);
  const auto hom = commutator_hom_lie(tw, a);
  EXPECT_EQ(hom.mu.flatten(), fixtures::yau_gl2().mu().flatten());
}

TEST(Structures, CommutativeProductGivesAbelianBracket) {
  BilinearMap prod(2, 2, 2);
  prod.on_basis(0, 0) = Vec{1, 0};
  prod.on_basis(0, 1) = Vec{0, 1};
  prod.on_basis(1, 0) = Vec{0, 1};
  EXPECT_TRUE(commutator_hom_lie(prod, Mat::identity(2)).mu.is_zero());
}

TEST(Structures, AdjointIsARepresentationAndAction) {
  for (const auto& g : {fixtures::fixture_b(), fixtures::yau_sl2(), fixtures::yau_gl2()}) {
    EXPECT_TRUE(check_representation(adjoint_representation(g)));
    EXPECT_TRUE(check_action(adjoint_action(g)));
  }
}

TEST(Structures, BrokenRepresentationGivesWitness) {
  const auto g = fixtures::sl2();
  BilinearMap act(3, 1, 1);
  act.on_basis(1, 0) = Vec{1};  // h acts by 1 on a line: fails [e,f]⋄v = e⋄f⋄v - f⋄e⋄v
  const auto w = find_representation_failure(Representation(g, make_space(Mat::identity(1)), act));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->axiom, "representation");
}

TEST(Structures, ProjectionActionOfFixtureB) {
  const auto action = suite::projection_action(fixtures::fixture_b());
  EXPECT_EQ(action.acting().dim(), 6u);
  EXPECT_TRUE(check_action(action));
  EXPECT_EQ(action.acting().space()->names()[3], "e1'");
}

TEST(Structures, SemidirectWeightIsHomLieForSeveralWeights) {
  const auto B = fixtures::fixture_b();
  for (const Scalar& l : {Scalar(0), Scalar(1), Scalar(-1, 2), Scalar(3)}) {
    const auto sd = semidirect_weight(adjoint_action(B), l);
    EXPECT_TRUE(check_hom_jacobi(sd.raw()));
    // [e1',e2'] = λ[e1,e2]
    EXPECT_EQ(sd.bracket_basis(3, 4), (Vec{0, 0, 0, 0, 0, l}));
  }
}

TEST(Structures, MorphismChecks) {
  const auto B = fixtures::fixture_b();
  EXPECT_TRUE(check_morphism(HomMorphism(B, B, Mat::identity(3))));
  EXPECT_TRUE(check_morphism(HomMorphism(B, B, Mat(3, 3))));
  const auto w = find_morphism_failure(HomMorphism(B, B, Scalar(2) * Mat::identity(3)));
  ASSERT_TRUE(w);  // 2[x,y] vs [2x,2y]
  EXPECT_EQ(w->axiom, "bracket preservation");
  EXPECT_THROW(HomMorphism(B, B, Mat::identity(2)), UsageError);
}

TEST(Structures, MorphismMaurerCartanAgreesWithPointwise) {
  const auto B = fixtures::fixture_b();
  for (const Scalar& c : {Scalar(0), Scalar(1), Scalar(2), Scalar(-1)}) {
    HomMorphism phi(B, B, c * Mat::identity(3));
    EXPECT_EQ(mc_residual_morphism(phi.as_cochain(), B, B).is_zero(), check_morphism(phi)) << c;
  }
}

TEST(Structures, BracketEntriesValidated) {
  auto space = make_space(Mat::identity(2));
  EXPECT_THROW(bracket_from_entries(space, {{1, 0, Vec{1, 0}}}), UsageError);
  EXPECT_THROW(bracket_from_entries(space, {{0, 1, Vec{1}}}), UsageError);
}

TEST(Structures, FormatVector) {
  EXPECT_EQ(format_vector(Vec{0, 3, 0}, {"e", "h", "f"}), "3·h");
  EXPECT_EQ(format_vector(Vec{1, 0, Scalar(-1, 2)}, {"e", "h", "f"}), "e - 1/2·f");
  EXPECT_EQ(format_vector(Vec{0, 0}, {"a", "b"}), "0");
}
