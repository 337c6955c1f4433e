#include <gtest/gtest.h>

#include "homlie/cohomology.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/operators.hpp"
#include "homlie/theorem_suite.hpp"

using namespace homlie;

namespace {

SkewCochain scaled_identity(const HomLieAlgebra& g, const Scalar& c) {
  return operator_cochain(c * Mat::identity(g.dim()), g.space(), g.space());
}

SkewCochain random_op(const SpaceRef& dom, const SpaceRef& cod, suite::Rng& rng) {
  SkewCochain c(dom, cod, 1);
  for (const auto& b : compatibility_basis(dom, cod, 1)) c += Scalar(rng.uniform(-2, 2)) * b;
  return c;
}

}  // namespace

TEST(Nijenhuis, ScaledIdentityPasses) {
  for (const auto& [name, g] : suite::default_fixtures())
    for (const Scalar& c : {Scalar(0), Scalar(1), Scalar(-2), Scalar(1, 2)}) {
      const auto N = scaled_identity(g, c);
      EXPECT_TRUE(is_nijenhuis(N, g)) << name << " " << c;
      const auto r = nijenhuis_deformation_check(N, g);
      for (const auto& s : r.checks) EXPECT_TRUE(s.ok) << name << " " << c << ": " << s.name << " " << s.detail;
    }
}

TEST(Nijenhuis, SearchOnFixtureBPassesEveryPostcondition) {
  const auto g = fixtures::fixture_b();
  const auto found = search_nijenhuis(g);
  EXPECT_GT(found.size(), 4u);  // more than the scalar multiples
  for (const auto& N : found) {
    EXPECT_TRUE(nijenhuis_defect(N, g).is_zero());
    EXPECT_TRUE(fn_bracket(N, N, g).is_zero());
    const auto r = nijenhuis_deformation_check(N, g);
    EXPECT_TRUE(r.ok);
    for (const auto& s : r.checks) EXPECT_TRUE(s.ok) << s.name << " " << s.detail;
  }
}

TEST(Nijenhuis, SearchAgreesWithDirectEnumeration) {
  // count by the pointwise identity alone over the same coordinates
  const auto g = fixtures::fixture_b();
  const auto basis = compatibility_basis(g.space(), g.space(), 1);
  std::size_t count = 0, total = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    SkewCochain N(g.space(), g.space(), 1);
    std::size_t c = code;
    for (const auto& b : basis) {
      N += Scalar(static_cast<int>(c % 3) - 1) * b;
      c /= 3;
    }
    count += nijenhuis_defect(N, g).is_zero();
  }
  EXPECT_EQ(search_nijenhuis(g).size(), count);
}

TEST(Nijenhuis, NonNijenhuisRejectedAndPrecondition) {
  const auto g = fixtures::yau_sl2();
  suite::Rng rng(31);
  std::size_t rejected = 0;
  for (int t = 0; t < 20; ++t) {
    const auto N = random_op(g.space(), g.space(), rng);
    const bool direct = nijenhuis_defect(N, g).is_zero();
    EXPECT_EQ(is_nijenhuis(N, g), direct);
    if (!direct) {
      ++rejected;
      EXPECT_THROW(nijenhuis_deformation_check(N, g), UsageError);
    }
  }
  EXPECT_GT(rejected, 0u);
}

TEST(RotaBaxter, ZeroAndMinusLambdaIdentity) {
  for (const auto& [name, g] : suite::default_fixtures())
    for (const Scalar& l : {Scalar(0), Scalar(1), Scalar(2), Scalar(-1, 2)}) {
      EXPECT_TRUE(is_rota_baxter(scaled_identity(g, 0), g, l)) << name;
      EXPECT_TRUE(is_rota_baxter(scaled_identity(g, -l), g, l)) << name;
    }
}

TEST(RotaBaxter, CriteriaAgreeOnRandomCandidates) {
  std::size_t pass = 0, fail = 0;
  for (const auto& [name, g] : suite::default_fixtures()) {
    suite::Rng rng(suite::fnv1a(name));
    for (int t = 0; t < 40; ++t) {
      const Scalar l(rng.uniform(-2, 2));
      const auto R = t % 8 == 0 ? scaled_identity(g, -l) : random_op(g.space(), g.space(), rng);
      const bool direct = rota_baxter_defect(R, g, l).is_zero();
      const bool mc = mc_residual_derived(R, g, l).is_zero();
      EXPECT_EQ(direct, mc) << name << " trial " << t;
      (direct ? pass : fail) += 1;
    }
  }
  EXPECT_GT(pass, 0u);
  EXPECT_GT(fail, 0u);
}

TEST(RotaBaxter, SearchResultsSatisfyBothCriteria) {
  const auto g = fixtures::fixture_b();
  const auto found = search_rota_baxter(g, 1);
  EXPECT_GE(found.size(), 2u);  // at least 0 and -id
  for (const auto& R : found) {
    EXPECT_TRUE(rota_baxter_defect(R, g, 1).is_zero());
    EXPECT_TRUE(mc_residual_derived(R, g, 1).is_zero());
  }
}

TEST(RotaBaxter, IdentityFailsWithWitness) {
  const auto g = fixtures::fixture_b();
  const auto R = scaled_identity(g, 1);
  EXPECT_FALSE(is_rota_baxter(R, g, 1));
  const auto w = detail::defect_witness(rota_baxter_defect(R, g, 1), "Rota-Baxter identity");
  ASSERT_TRUE(w);
  // [x,y] - ([x,y] + [x,y] + [x,y]) = -2[x,y], first nonzero at (e1,e2)
  EXPECT_EQ(w->labels, (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(w->lhs, (Vec{0, 0, -2}));
}

TEST(RelativeRB, CriteriaAgreeOnRandomCandidates) {
  const auto g = fixtures::fixture_b();
  const auto action = suite::projection_action(g);
  ASSERT_TRUE(check_action(action));
  suite::Rng rng(55);
  std::size_t pass = 0, fail = 0;
  for (int t = 0; t < 48; ++t) {
    const Scalar l(rng.uniform(-2, 2));
    SkewCochain R = random_op(action.acted().space(), action.acting().space(), rng);
    if (t % 4 == 0) R = suite::projection_rb(action, l);
    if (t % 4 == 1) R = SkewCochain(action.acted().space(), action.acting().space(), 1);
    const auto c = relative_rb_criteria(R, action, l);
    EXPECT_EQ(c.pointwise, c.graph) << t;
    EXPECT_EQ(c.pointwise, c.maurer_cartan) << t;
    (c.pointwise ? pass : fail) += 1;
  }
  EXPECT_GE(pass, 24u);
  EXPECT_GT(fail, 0u);
}

TEST(RelativeRB, ScaledProjectionOnlyAtZeroAndMinusLambda) {
  // μ·(h,0) is relative RB iff μ(μ+λ) = 0
  const auto action = suite::projection_action(fixtures::fixture_b());
  const Scalar l(1);
  for (int mu = -3; mu <= 3; ++mu) {
    const auto R = Scalar(-mu) * suite::projection_rb(action, l);
    EXPECT_EQ(is_relative_rb(R, action, l), mu == 0 || mu == -1) << mu;
  }
}

TEST(RelativeRB, InducedStructuresOfVerifiedOperators) {
  const auto g = fixtures::fixture_b();
  const auto action = suite::projection_action(g);
  for (const Scalar& l : {Scalar(0), Scalar(1), Scalar(-1, 2), Scalar(2)}) {
    for (const auto& R : {suite::projection_rb(action, l), SkewCochain(g.space(), action.acting().space(), 1)}) {
      ASSERT_TRUE(is_relative_rb(R, action, l));
      const auto ind = induced_structures(R, action, l);
      EXPECT_TRUE(check_hom_jacobi(ind.algebra.raw()));
      EXPECT_TRUE(check_representation(ind.representation));
      EXPECT_TRUE(check_morphism(HomMorphism(ind.algebra, action.acting(), operator_matrix(R))));
      const auto dR = CochainComplex::relative_rb(action, R, l);
      const auto dind = CochainComplex::hom_rep(ind.representation);
      for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(dR.differential_matrix(n), dind.differential_matrix(n)) << l << " " << n;
    }
  }
}

TEST(RelativeRB, ZeroOperatorZeroWeightIsAbelian) {
  const auto action = suite::projection_action(fixtures::fixture_b());
  const SkewCochain R(action.acted().space(), action.acting().space(), 1);
  const auto ind = induced_structures(R, action, 0);
  EXPECT_TRUE(ind.algebra.mu().is_zero());
  EXPECT_TRUE(ind.representation.action().is_zero());
}

TEST(RelativeRB, InducedStructuresRejectsNonOperator) {
  const auto action = suite::projection_action(fixtures::fixture_b());
  EXPECT_THROW(induced_structures(Scalar(5) * suite::projection_rb(action, 1), action, 1), UsageError);
}

TEST(RelativeRB, AdjointActionReducesToRotaBaxter) {
  // with 𝔥 = 𝔤 adjoint, the relative identity is the ordinary weight-λ one
  const auto g = fixtures::yau_sl2();
  const auto action = adjoint_action(g);
  suite::Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const Scalar l(rng.uniform(-2, 2));
    const auto R = t % 3 == 0 ? scaled_identity(g, -l) : random_op(g.space(), g.space(), rng);
    EXPECT_EQ(relative_rb_defect(R, action, l), rota_baxter_defect(R, g, l)) << t;
  }
}

TEST(Operators, MatrixRoundTrip) {
  const auto g = fixtures::fixture_b();
  const Mat m = Mat::from_rows({{1, 0, 0}, {0, 2, 3}, {0, -1, 0}});
  EXPECT_EQ(operator_matrix(operator_cochain(m, g.space(), g.space())), m);
  EXPECT_THROW(operator_cochain(Mat::identity(2), g.space(), g.space()), UsageError);
}
