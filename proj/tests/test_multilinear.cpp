#include <gtest/gtest.h>

#include <algorithm>

#include "homlie/fixtures.hpp"
#include "homlie/multilinear.hpp"
#include "homlie/theorem_suite.hpp"

using namespace homlie;

namespace {

SkewCochain sample(const SpaceRef& s, std::size_t arity, std::uint64_t seed) {
  suite::Rng rng(seed);
  return SkewCochain::tabulate(s, s, arity, [&](const std::vector<std::size_t>&) {
    Vec v(s->dim());
    for (std::size_t i = 0; i < s->dim(); ++i) v[i] = rng.uniform(-3, 3);
    return v;
  });
}

SkewCochain sample_compatible(const SpaceRef& s, std::size_t arity, std::uint64_t seed) {
  suite::Rng rng(seed);
  SkewCochain c(s, s, arity);
  for (const auto& b : compatibility_basis(s, s, arity)) c += Scalar(rng.uniform(-3, 3)) * b;
  return c;
}

}  // namespace

TEST(Multilinear, WedgePowerMatchesMinors) {
  const Mat a = Mat::diagonal({1, 2, 2});
  EXPECT_EQ(wedge_power(a, 2), Mat::diagonal({2, 2, 4}));
  EXPECT_EQ(wedge_power(a, 3), Mat::diagonal({4}));
  // Λ^n of an n×n matrix is its determinant: det [[1,2],[3,4]] = -2
  EXPECT_EQ(wedge_power(Mat::from_rows({{1, 2}, {3, 4}}), 2), Mat::diagonal({-2}));
}

TEST(Multilinear, EvaluationIsAlternating) {
  const auto s = make_space(Mat::identity(4));
  const auto f = sample(s, 3, 11);
  const std::vector<std::size_t> base{0, 2, 3};
  std::vector<std::size_t> p{0, 1, 2};
  do {
    EXPECT_EQ(f.on_basis({base[p[0]], base[p[1]], base[p[2]]}), Scalar(permutation_sign(p)) * f.on_basis(base));
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_TRUE(f.on_basis({1, 1, 3}).is_zero());
}

TEST(Multilinear, VectorEvaluationExpandsMultilinearly) {
  const auto s = make_space(Mat::identity(3));
  const auto f = sample(s, 2, 5);
  const Vec x{1, 2, 0}, y{0, -1, 3};
  // bilinear expansion by hand
  Vec expect(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) expect.add_scaled(x[i] * y[j], f.on_basis({i, j}));
  EXPECT_EQ(f({x, y}), expect);
  EXPECT_EQ(f({x, y}), -f({y, x}));
}

TEST(Multilinear, FlatRoundTrip) {
  const auto s = make_space(Mat::identity(3));
  const auto f = sample(s, 2, 9);
  EXPECT_EQ(SkewCochain::from_flat(s, s, 2, f.flatten()), f);
}

TEST(Multilinear, IdentityTwistMakesEverythingCompatible) {
  const auto s = make_space(Mat::identity(3));
  EXPECT_TRUE(is_compatible(sample(s, 2, 3)));
  EXPECT_EQ(compatibility_basis(s, s, 2).size(), 9u);  // C(3,2)·3
}

TEST(Multilinear, CompatibilityBasisDimension) {
  // α = diag(1,2,2): endomorphisms commuting with α are block diagonal, 1² + 2² = 5
  const auto B = fixtures::fixture_b();
  const auto basis = compatibility_basis(B.space(), B.space(), 1);
  EXPECT_EQ(basis.size(), 5u);
  for (const auto& b : basis) EXPECT_TRUE(is_compatible(b));
  // arity 2: pairs of equal eigenvalues between Λ²α = diag(2,2,4) and α
  std::size_t expect = 0;
  const std::vector<int> in{2, 2, 4}, out{1, 2, 2};
  for (int a : in)
    for (int b : out) expect += a == b;
  EXPECT_EQ(compatibility_basis(B.space(), B.space(), 2).size(), expect);
}

TEST(Multilinear, NonCompatibleIsDetected) {
  const auto B = fixtures::fixture_b();
  SkewCochain f(B.space(), B.space(), 1);
  f.coeff(0)[1] = 1;  // e1 -> e2 mixes eigenvalues 1 and 2
  EXPECT_FALSE(is_compatible(f));
  EXPECT_THROW(require_compatible(f, "test"), UsageError);
}

TEST(Multilinear, ContractingTheIdentityCountsArguments) {
  // i_id Q = n·Q: each of the n shuffles moves one argument to the front with its sign
  const auto Y = fixtures::yau_sl2();
  SkewCochain id(Y.space(), Y.space(), 1);
  for (std::size_t i = 0; i < 3; ++i) id.coeff(i) = Vec::unit(3, i);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto Q = sample_compatible(Y.space(), n, 40 + n);
    EXPECT_EQ(contract(id, Q), Scalar(n) * Q);
  }
}

TEST(Multilinear, ContractionByHand) {
  // arity 2 into arity 2, twist diag(1,2,3): (i_P Q)(x,y,z) = Q(P(x,y),αz) - Q(P(x,z),αy) + Q(P(y,z),αx)
  const auto s = make_space(Mat::diagonal({1, 2, 3}));
  const auto P = sample(s, 2, 21), Q = sample(s, 2, 22);
  const Mat& a = s->twist();
  const Vec x = Vec::unit(3, 0), y = Vec::unit(3, 1), z = Vec::unit(3, 2);
  const Vec expect = Q({P({x, y}), a * z}) - Q({P({x, z}), a * y}) + Q({P({y, z}), a * x});
  EXPECT_EQ(contract(P, Q).on_basis({0, 1, 2}), expect);
}

TEST(Multilinear, GradedRightPreLie) {
  const auto g = fixtures::yau_gl2();
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t m = 1 + seed % 2, n = 1 + (seed / 2) % 2;
    const auto P = sample_compatible(g.space(), m, seed), Q = sample_compatible(g.space(), n, seed + 100),
               R = sample_compatible(g.space(), 2, seed + 200);
    EXPECT_EQ(contract(contract(P, Q), R) - contract(P, contract(Q, R)),
              (((m - 1) * (n - 1)) % 2 ? -1 : 1) * (contract(contract(Q, P), R) - contract(Q, contract(P, R))));
  }
}

TEST(Multilinear, ArityZeroContractionRejected) {
  const auto s = make_space(Mat::identity(2));
  EXPECT_THROW(contract(SkewCochain(s, s, 0), SkewCochain(s, s, 1)), UsageError);
}
