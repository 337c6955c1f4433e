#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "homlie/brackets.hpp"
#include "homlie/cohomology.hpp"
#include "homlie/differentials.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/operators.hpp"

namespace homlie::suite {

enum class IdentityId {
  mc_homlie = 1,
  nr_graded_lie,
  cup_graded_lie,
  cup_via_theta,
  cup_via_delta,
  delta_cup_derivation,
  cup_trivial_cohomology,
  theta_cup_derivation,
  pre_lie,
  rho_is_action,
  semidirect_jacobi,
  graph_delta_closed,
  fn_graded_lie,
  fn_two_formulas,
  matched_pair_axioms,
  bicrossed_jacobi_psi,
  graph_theta_closed,
  derived_graded_lie,
  derived_two_formulas,
  d_lambda_derivation,
  theta_squared,
  rb_lemma,
  relative_consistency,
  d_R_matches_induced,
};

inline constexpr std::size_t kIdentityCount = 24;

inline constexpr std::array<std::string_view, kIdentityCount> kIdentityNames{
    "mc_homlie",           "nr_graded_lie",       "cup_graded_lie",      "cup_via_theta",        "cup_via_delta",
    "delta_cup_derivation", "cup_trivial_cohomology", "theta_cup_derivation", "pre_lie",          "rho_is_action",
    "semidirect_jacobi",   "graph_delta_closed",  "fn_graded_lie",       "fn_two_formulas",      "matched_pair_axioms",
    "bicrossed_jacobi_psi", "graph_theta_closed", "derived_graded_lie",  "derived_two_formulas", "d_lambda_derivation",
    "theta_squared",       "rb_lemma",            "relative_consistency", "d_R_matches_induced",
};

inline int number(IdentityId id) { return static_cast<int>(id); }
inline std::string_view name(IdentityId id) { return kIdentityNames[static_cast<std::size_t>(number(id) - 1)]; }

inline std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> v;
  for (int k = 1; k <= static_cast<int>(kIdentityCount); ++k) v.push_back(static_cast<IdentityId>(k));
  return v;
}

/// Accepts the tag name or its number.
inline IdentityId parse_identity(std::string_view s) {
  for (std::size_t k = 0; k < kIdentityCount; ++k)
    if (kIdentityNames[k] == s || std::to_string(k + 1) == s) return static_cast<IdentityId>(k + 1);
  throw UsageError("unknown identity '" + std::string(s) + "'");
}

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t max_arity = 3;
  bool mutate_cup = false;  // test-harness mutation: cup without shuffle signs
};

struct Failure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // the per-trial PRNG seed
  std::string check;
  std::vector<std::string> witness;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  IdentityId identity{};
  std::string algebra;
  std::size_t trials = 0;
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<VerificationReport> reports;
  bool passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  }
  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.failures.size();
    return n;
  }
};

// ---------------------------------------------------------------- PRNG

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

inline std::uint64_t trial_seed(std::uint64_t seed, IdentityId id, std::string_view algebra, std::size_t trial) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ static_cast<std::uint64_t>(number(id)));
  s = splitmix64(s ^ fnv1a(algebra));
  return splitmix64(s ^ static_cast<std::uint64_t>(trial));
}

class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}
  std::uint64_t next() { return state_ = splitmix64(state_); }
  /// Uniform in [lo, hi]; the modulo bias is irrelevant at these ranges.
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t uniform(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(next() % (hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

// -------------------------------------------------------------- oracles
// Written straight from the explicit formulas, sharing nothing with the
// library brackets beyond cochain storage and the algebra's bracket.

namespace oracle {

inline Mat mat_pow(const Mat& a, std::size_t k) {
  Mat r = Mat::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

/// All permutations of 0..n-1 increasing inside consecutive blocks, with sign.
inline std::vector<std::pair<std::vector<std::size_t>, int>> block_shuffles(const std::vector<std::size_t>& blocks) {
  std::size_t n = 0;
  for (auto b : blocks) n += b;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<std::pair<std::vector<std::size_t>, int>> out;
  do {
    bool ok = true;
    for (std::size_t start = 0, b = 0; b < blocks.size() && ok; start += blocks[b++])
      for (std::size_t i = start + 1; i < start + blocks[b]; ++i)
        if (p[i - 1] > p[i]) ok = false;
    if (!ok) continue;
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    out.emplace_back(p, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Adjoint δ_Hom f evaluated on vectors.
inline Vec delta_at(const SkewCochain& f, const HomLieAlgebra& g, const std::vector<Vec>& x) {
  const std::size_t n = f.arity();
  const Mat an = mat_pow(g.twist(), n - 1), a = g.twist();
  Vec out(g.dim());
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Vec> rest;
    for (std::size_t k = 0; k <= n; ++k)
      if (k != i) rest.push_back(x[k]);
    const Vec v = g.bracket(an * x[i], f(rest));
    if (i % 2 == 0) out += v;
    else out -= v;
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::vector<Vec> args{g.bracket(x[i], x[j])};
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i && k != j) args.push_back(a * x[k]);
      const Vec v = f(args);
      if ((i + j) % 2 == 0) out += v;
      else out -= v;
    }
  return out;
}

inline Vec cup_at(const SkewCochain& P, const SkewCochain& Q, const HomLieAlgebra& g, const std::vector<Vec>& x) {
  const std::size_t m = P.arity(), n = Q.arity();
  const Mat ap = mat_pow(g.twist(), n - 1), aq = mat_pow(g.twist(), m - 1);
  Vec out(g.dim());
  for (const auto& [s, sign] : block_shuffles({m, n})) {
    std::vector<Vec> a, b;
    for (std::size_t i = 0; i < m; ++i) a.push_back(x[s[i]]);
    for (std::size_t i = 0; i < n; ++i) b.push_back(x[s[m + i]]);
    out.add_scaled(Scalar(sign), g.bracket(ap * P(a), aq * Q(b)));
  }
  return out;
}

/// Explicit FN formula.
inline SkewCochain fn_explicit(const SkewCochain& P, const SkewCochain& Q, const HomLieAlgebra& g) {
  const std::size_t m = P.arity(), n = Q.arity();
  const std::size_t d = g.dim();
  // Σ_{Sh(k+1, l-1)} ± B(δA(x..), α^k x..)
  auto term = [&](const SkewCochain& A, const SkewCochain& B, const std::vector<Vec>& x) {
    const std::size_t k = A.arity(), l = B.arity();
    const Mat ak = mat_pow(g.twist(), k);
    Vec out(d);
    for (const auto& [s, sign] : block_shuffles({k + 1, l - 1})) {
      std::vector<Vec> inner;
      for (std::size_t i = 0; i <= k; ++i) inner.push_back(x[s[i]]);
      std::vector<Vec> args{delta_at(A, g, inner)};
      for (std::size_t i = k + 1; i < k + l; ++i) args.push_back(ak * x[s[i]]);
      out.add_scaled(Scalar(sign), B(args));
    }
    return out;
  };
  return SkewCochain::tabulate(P.domain(), P.codomain(), m + n, [&](const std::vector<std::size_t>& t) {
    std::vector<Vec> x;
    for (auto i : t) x.push_back(Vec::unit(d, i));
    Vec out = cup_at(P, Q, g, x);
    out.add_scaled(Scalar(sign_pow(m)), term(P, Q, x));
    out.add_scaled(Scalar(-sign_pow((m + 1) * n)), term(Q, P, x));
    return out;
  });
}

/// Explicit derived-bracket formula.
inline SkewCochain derived_explicit(const SkewCochain& P, const SkewCochain& Q, const HomLieAlgebra& g) {
  const std::size_t m = P.arity(), n = Q.arity();
  const std::size_t d = g.dim();
  // Σ_{Sh(k,1,l-1)} ± B([A(x..), α^{k-1} x], α^k x..)
  auto term = [&](const SkewCochain& A, const SkewCochain& B, const std::vector<Vec>& x) {
    const std::size_t k = A.arity(), l = B.arity();
    const Mat ak1 = mat_pow(g.twist(), k - 1), ak = mat_pow(g.twist(), k);
    Vec out(d);
    for (const auto& [s, sign] : block_shuffles({k, 1, l - 1})) {
      std::vector<Vec> inner;
      for (std::size_t i = 0; i < k; ++i) inner.push_back(x[s[i]]);
      std::vector<Vec> args{g.bracket(A(inner), ak1 * x[s[k]])};
      for (std::size_t i = k + 1; i < k + l; ++i) args.push_back(ak * x[s[i]]);
      out.add_scaled(Scalar(sign), B(args));
    }
    return out;
  };
  return SkewCochain::tabulate(P.domain(), P.codomain(), m + n, [&](const std::vector<std::size_t>& t) {
    std::vector<Vec> x;
    for (auto i : t) x.push_back(Vec::unit(d, i));
    Vec out = cup_at(P, Q, g, x);
    out -= term(P, Q, x);
    out.add_scaled(Scalar(sign_pow(m * n)), term(Q, P, x));
    return out;
  });
}

/// Cyclic sum [αx,[y,z]] + [αy,[z,x]] + [αz,[x,y]] vanishes on all basis triples.
inline bool hom_jacobi_direct(const SpaceRef& space, const SkewCochain& mu) {
  const std::size_t d = space->dim();
  auto br = [&](const Vec& x, const Vec& y) { return mu({x, y}); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Vec x = Vec::unit(d, i), y = Vec::unit(d, j), z = Vec::unit(d, k);
        const Mat& a = space->twist();
        if (!(br(a * x, br(y, z)) + br(a * y, br(z, x)) + br(a * z, br(x, y))).is_zero()) return false;
      }
  return true;
}

/// Unsigned cup: every shuffle counted with +1.
inline SkewCochain cup_unsigned(const SkewCochain& P, const SkewCochain& Q, const HomLieAlgebra& h) {
  const std::size_t m = P.arity(), n = Q.arity();
  const Mat& bp = h.space()->power(n - 1);
  const Mat& bq = h.space()->power(m - 1);
  return SkewCochain::tabulate(P.domain(), h.space(), m + n, [&](const std::vector<std::size_t>& x) {
    Vec out(h.dim());
    for (const auto& s : shuffles({m, n})) {
      std::vector<std::size_t> a(m), b(n);
      for (std::size_t i = 0; i < m; ++i) a[i] = x[s.perm[i]];
      for (std::size_t i = 0; i < n; ++i) b[i] = x[s.perm[m + i]];
      out += h.bracket(bp * P.on_basis(a), bq * Q.on_basis(b));
    }
    return out;
  });
}

}  // namespace oracle

// ------------------------------------------------------------ harness

/// 𝔤 ⋉_1 𝔤 (adjoint) acting on 𝔤 through the projection: (x,y)⋄k = [x,k].
inline HomLieAction projection_action(const HomLieAlgebra& a) {
  const HomLieAlgebra G = semidirect_weight(adjoint_action(a), 1);
  BilinearMap act(G.dim(), a.dim(), a.dim());
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t k = 0; k < a.dim(); ++k) act.on_basis(x, k) = a.bracket_basis(x, k);
  return HomLieAction(Representation(G, a.space(), std::move(act)), a);
}

/// R(h) = (-λh, 0) for projection_action.
inline SkewCochain projection_rb(const HomLieAction& action, const Scalar& lambda) {
  const auto& h = action.acted();
  SkewCochain R(h.space(), action.acting().space(), 1);
  for (std::size_t i = 0; i < h.dim(); ++i) R.coeff(i)[i] = -lambda;
  return R;
}

struct Mismatch {
  std::string check;
  std::vector<std::string> witness;
  std::string lhs;
  std::string rhs;
};

using Outcome = std::optional<Mismatch>;

inline Outcome compare(const std::string& check, const SkewCochain& lhs, const SkewCochain& rhs) {
  if (lhs.arity() != rhs.arity() || !lhs.same_shape(rhs)) throw ConsistencyError(check + ": sides have different shapes");
  const auto& names = lhs.domain()->names();
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lhs.coeff(k) == rhs.coeff(k)) continue;
    Mismatch m{check, {}, format_vector(lhs.coeff(k), lhs.codomain()->names()),
               format_vector(rhs.coeff(k), rhs.codomain()->names())};
    for (auto i : lhs.basis().tuples[k]) m.witness.push_back(names[i]);
    return m;
  }
  return std::nullopt;
}

inline Outcome compare(const std::string& check, const GradedPair& lhs, const GradedPair& rhs) {
  if (auto o = compare(check + " (upper)", lhs.upper, rhs.upper)) return o;
  return compare(check + " (lower)", lhs.lower, rhs.lower);
}

inline SkewCochain zero_like(const SkewCochain& c) { return SkewCochain(c.domain(), c.codomain(), c.arity()); }
inline GradedPair zero_like(const GradedPair& p) { return GradedPair(zero_like(p.upper), zero_like(p.lower)); }

/// Graded skew-symmetry and Jacobi for three elements with given degrees.
template <class T, class Br>
Outcome graded_lie(const std::string& what, const T& a, std::size_t da, const T& b, std::size_t db, const T& c, std::size_t dc,
                   Br br) {
  if (auto o = compare(what + " skew", br(a, b), -sign_pow(da * db) * br(b, a))) return o;
  T j = sign_pow(da * dc) * br(a, br(b, c));
  j += sign_pow(db * da) * br(b, br(c, a));
  j += sign_pow(dc * db) * br(c, br(a, b));
  return compare(what + " jacobi", j, zero_like(j));
}

class Harness {
 public:
  Harness(const HomLieAlgebra& g, Rng& rng, const SuiteConfig& cfg) : g_(g), rng_(rng), cfg_(cfg) {}

  const HomLieAlgebra& g() const { return g_; }
  Rng& rng() { return rng_; }
  std::size_t max_arity() const { return std::max<std::size_t>(cfg_.max_arity, 1); }

  std::size_t arity(std::size_t lo = 1) { return rng_.uniform(lo, std::max(lo, max_arity())); }
  int coeff() { return rng_.uniform(-3, 3); }

  SkewCochain random(const SpaceRef& dom, const SpaceRef& cod, std::size_t arity) {
    SkewCochain c(dom, cod, arity);
    for (const auto& b : basis(dom, cod, arity)) {
      const int k = coeff();
      if (k != 0) c += Scalar(k) * b;
    }
    return c;
  }
  SkewCochain random(std::size_t arity) { return random(g_.space(), g_.space(), arity); }

  SkewCochain cup(const SkewCochain& P, const SkewCochain& Q) const {
    return cfg_.mutate_cup ? oracle::cup_unsigned(P, Q, g_) : cup_bracket(P, Q, g_);
  }

  GradedPair random_pair(std::size_t m) { return GradedPair(random(m + 1), random(m)); }
  /// Lower degree for pair algebras, keeping the upper arity within the cap.
  std::size_t pair_degree() { return rng_.uniform(std::size_t{1}, std::max<std::size_t>(1, max_arity() - 1)); }

 private:
  const std::vector<SkewCochain>& basis(const SpaceRef& dom, const SpaceRef& cod, std::size_t arity) {
    auto key = std::make_tuple(dom.get(), cod.get(), arity);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, compatibility_basis(dom, cod, arity)).first;
    return it->second;
  }

  const HomLieAlgebra& g_;
  Rng& rng_;
  const SuiteConfig& cfg_;
  std::map<std::tuple<const TwistedSpace*, const TwistedSpace*, std::size_t>, std::vector<SkewCochain>> cache_;
};

namespace checks {

inline Outcome mc_homlie(Harness& H) {
  const auto& g = H.g();
  SkewCochain mu = g.mu();
  switch (H.rng().uniform(0, 2)) {
    case 0: mu *= Scalar(H.coeff()); break;
    case 1: mu += H.random(2); break;
    default: mu = H.random(2); break;
  }
  const bool mc = nr_bracket(mu, mu).is_zero();
  const bool jac = oracle::hom_jacobi_direct(g.space(), mu);
  if (mc == jac) return std::nullopt;
  return Mismatch{"[mu,mu]_NR = 0 vs Hom-Jacobi", {}, mc ? "true" : "false", jac ? "true" : "false"};
}

inline Outcome nr_graded_lie(Harness& H) {
  const std::size_t a = H.arity(), b = H.arity(), c = H.arity();
  return graded_lie("NR", H.random(a), a - 1, H.random(b), b - 1, H.random(c), c - 1,
                    [](const SkewCochain& x, const SkewCochain& y) { return nr_bracket(x, y); });
}

inline Outcome cup_graded_lie(Harness& H) {
  const std::size_t a = H.arity(), b = H.arity(), c = H.arity();
  return graded_lie("cup", H.random(a), a, H.random(b), b, H.random(c), c,
                    [&](const SkewCochain& x, const SkewCochain& y) { return H.cup(x, y); });
}

inline Outcome cup_via_theta(Harness& H) {
  const auto& g = H.g();
  const std::size_t n = H.arity();
  const SkewCochain P = H.random(H.arity()), Q = H.random(n);
  return compare("[P,Q]_C = (-1)^n (i_P thetaQ - theta(i_P Q))", H.cup(P, Q),
                 sign_pow(n) * (contract(P, theta(Q, g)) - theta(contract(P, Q), g)));
}

inline Outcome cup_via_delta(Harness& H) {
  const auto& g = H.g();
  const std::size_t m = H.arity();
  const SkewCochain P = H.random(m), Q = H.random(H.arity());
  return compare("[P,Q]_C = i_P dQ + (-1)^{m-1} i_{dP} Q + (-1)^m d(i_P Q)", H.cup(P, Q),
                 contract(P, delta_hom(Q, g)) + sign_pow(m - 1) * contract(delta_hom(P, g), Q) +
                     sign_pow(m) * delta_hom(contract(P, Q), g));
}

inline Outcome delta_cup_derivation(Harness& H) {
  const auto& g = H.g();
  const std::size_t m = H.arity();
  const SkewCochain P = H.random(m), Q = H.random(H.arity());
  return compare("d[P,Q]_C = [dP,Q]_C + (-1)^m [P,dQ]_C", delta_hom(H.cup(P, Q), g),
                 H.cup(delta_hom(P, g), Q) + sign_pow(m) * H.cup(P, delta_hom(Q, g)));
}

inline SkewCochain random_cocycle(Harness& H, const CochainComplex& cx, std::size_t n) {
  const Mat d = cx.differential_matrix(n);
  const auto& b = cx.basis(n);
  SkewCochain out(cx.domain(), cx.codomain(), n);
  for (const auto& k : kernel_basis(d)) {
    SkewCochain z(cx.domain(), cx.codomain(), n);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (sgn(k[i]) != 0) z += k[i] * b[i];
    const int c = H.coeff();
    if (c != 0) out += Scalar(c) * z;
  }
  return out;
}

inline Outcome cup_trivial_cohomology(Harness& H) {
  const auto& g = H.g();
  const auto cx = CochainComplex::hom_rep(adjoint_representation(g));
  const std::size_t m = H.arity();
  const SkewCochain P = random_cocycle(H, cx, m), Q = random_cocycle(H, cx, H.arity());
  const SkewCochain pre = sign_pow(m) * contract(P, Q);
  const SkewCochain cup = H.cup(P, Q);
  if (auto o = compare("[P,Q]_C = d((-1)^m i_P Q)", cup, delta_hom(pre, g))) return o;
  const auto p = cx.is_coboundary(cup);
  if (!p) return Mismatch{"is_coboundary([P,Q]_C)", {}, "none", "preimage expected"};
  if (auto o = compare("d(is_coboundary preimage) = [P,Q]_C", delta_hom(*p, g), cup)) return o;
  const SkewCochain diff = *p - pre;
  return compare("preimage class", delta_hom(diff, g), zero_like(delta_hom(diff, g)));
}

inline Outcome theta_cup_derivation(Harness& H) {
  const auto& g = H.g();
  const std::size_t n = H.arity();
  const SkewCochain P = H.random(H.arity()), Q = H.random(n);
  return compare("theta[P,Q]_C = (-1)^n [thetaP,Q]_C + [P,thetaQ]_C", theta(H.cup(P, Q), g),
                 sign_pow(n) * H.cup(theta(P, g), Q) + H.cup(P, theta(Q, g)));
}

inline Outcome pre_lie(Harness& H) {
  const std::size_t m = H.arity(), n = H.arity();
  const SkewCochain P = H.random(m), Q = H.random(n), R = H.random(H.arity());
  return compare("graded right pre-Lie", contract(contract(P, Q), R) - contract(P, contract(Q, R)),
                 sign_pow((m - 1) * (n - 1)) * (contract(contract(Q, P), R) - contract(Q, contract(P, R))));
}

inline Outcome rho_is_action(Harness& H) {
  const std::size_t pa = H.arity(), pa2 = H.arity(), eb = H.arity(), eb2 = H.arity();
  const SkewCochain a = H.random(pa), a2 = H.random(pa2), b = H.random(eb), b2 = H.random(eb2);
  const std::size_t da = pa - 1, da2 = pa2 - 1;
  if (auto o = compare("rho[a,a']_NR = rho(a)rho(a') -+ rho(a')rho(a)", rho_action(nr_bracket(a, a2), b),
                       rho_action(a, rho_action(a2, b)) - sign_pow(da * da2) * rho_action(a2, rho_action(a, b))))
    return o;
  return compare("rho(a) derivation of cup", rho_action(a, H.cup(b, b2)),
                 H.cup(rho_action(a, b), b2) + sign_pow(da * eb) * H.cup(b, rho_action(a, b2)));
}

inline Outcome semidirect_jacobi(Harness& H) {
  const std::size_t m = H.pair_degree(), n = H.pair_degree(), k = H.pair_degree();
  const auto& g = H.g();
  return graded_lie("semidirect", H.random_pair(m), m, H.random_pair(n), n, H.random_pair(k), k,
                    [&](const GradedPair& x, const GradedPair& y) { return semidirect_graded_bracket(x, y, g); });
}

inline Outcome graph_delta_closed(Harness& H) {
  const auto& g = H.g();
  const SkewCochain P = H.random(H.arity()), Q = H.random(H.arity());
  return compare("d[P,Q]_FN = [dP,dQ]_NR", delta_hom(fn_bracket(P, Q, g), g), nr_bracket(delta_hom(P, g), delta_hom(Q, g)));
}

inline Outcome fn_graded_lie(Harness& H) {
  const auto& g = H.g();
  const std::size_t a = H.arity(), b = H.arity(), c = H.arity();
  return graded_lie("FN", H.random(a), a, H.random(b), b, H.random(c), c,
                    [&](const SkewCochain& x, const SkewCochain& y) { return fn_bracket(x, y, g); });
}

inline Outcome fn_two_formulas(Harness& H) {
  const auto& g = H.g();
  const SkewCochain P = H.random(H.arity()), Q = H.random(H.arity());
  return compare("FN defining vs explicit", fn_bracket(P, Q, g), oracle::fn_explicit(P, Q, g));
}

inline Outcome matched_pair_axioms(Harness& H) {
  const auto& g = H.g();
  const std::size_t pa = H.arity(2), pa2 = H.arity(2), eb = H.arity(), eb2 = H.arity();
  const SkewCochain a = H.random(pa), a2 = H.random(pa2), b = H.random(eb), b2 = H.random(eb2);
  const std::size_t da = pa - 1, da2 = pa2 - 1;
  auto rho = [](const SkewCochain& x, const SkewCochain& e) { return rho_action(x, e); };
  auto psi = [&](const SkewCochain& e, const SkewCochain& x) { return psi_action(e, x, g); };
  auto nr = [](const SkewCochain& x, const SkewCochain& y) { return nr_bracket(x, y); };
  auto fn = [&](const SkewCochain& x, const SkewCochain& y) { return fn_bracket(x, y, g); };

  if (auto o = compare("matched pair 1", rho(nr(a, a2), b), rho(a, rho(a2, b)) - sign_pow(da * da2) * rho(a2, rho(a, b))))
    return o;
  if (auto o = compare("matched pair 2", rho(a, fn(b, b2)),
                       fn(rho(a, b), b2) + sign_pow(da * eb) * fn(b, rho(a, b2)) +
                           sign_pow((da + eb) * eb2) * rho(psi(b2, a), b) - sign_pow(da * eb) * rho(psi(b, a), b2)))
    return o;
  if (auto o = compare("matched pair 3", psi(fn(b, b2), a), psi(b, psi(b2, a)) - sign_pow(eb * eb2) * psi(b2, psi(b, a))))
    return o;
  return compare("matched pair 4", psi(b, nr(a, a2)),
                 nr(psi(b, a), a2) + sign_pow(eb * da) * nr(a, psi(b, a2)) + sign_pow((eb + da) * da2) * psi(rho(a2, b), a) -
                     sign_pow(eb * da) * psi(rho(a, b), a2));
}

inline Outcome bicrossed_jacobi_psi(Harness& H) {
  const auto& g = H.g();
  const std::size_t m = H.pair_degree(), n = H.pair_degree(), k = H.pair_degree();
  const GradedPair x = H.random_pair(m), y = H.random_pair(n), z = H.random_pair(k);
  if (auto o = graded_lie("bicrossed", x, m, y, n, z, k,
                          [&](const GradedPair& u, const GradedPair& v) { return bicrossed_bracket(u, v, g); }))
    return o;
  auto Psi = [&](const GradedPair& p) {
    return GradedPair(p.upper + sign_pow(p.degree()) * delta_hom(p.lower, g), p.lower);
  };
  return compare("Psi preserves brackets", Psi(bicrossed_bracket(x, y, g)), semidirect_graded_bracket(Psi(x), Psi(y), g));
}

inline Outcome graph_theta_closed(Harness& H) {
  const auto& g = H.g();
  const SkewCochain P = H.random(H.arity()), Q = H.random(H.arity());
  return compare("theta[P,Q]_D = [thetaP,thetaQ]_NR", theta(derived_bracket(P, Q, g), g), nr_bracket(theta(P, g), theta(Q, g)));
}

inline Outcome derived_graded_lie(Harness& H) {
  const auto& g = H.g();
  const std::size_t a = H.arity(), b = H.arity(), c = H.arity();
  return graded_lie("derived", H.random(a), a, H.random(b), b, H.random(c), c,
                    [&](const SkewCochain& x, const SkewCochain& y) { return derived_bracket(x, y, g); });
}

inline Outcome derived_two_formulas(Harness& H) {
  const auto& g = H.g();
  const SkewCochain P = H.random(H.arity()), Q = H.random(H.arity());
  return compare("derived defining vs explicit", derived_bracket(P, Q, g), oracle::derived_explicit(P, Q, g));
}

inline Outcome d_lambda_derivation(Harness& H) {
  const auto& g = H.g();
  const Scalar lambda(H.coeff());
  const std::size_t m = H.arity();
  const SkewCochain P = H.random(m), Q = H.random(H.arity());
  auto d = [&](const SkewCochain& f) { return d_lambda(f, g, lambda); };
  if (auto o = compare("d_lambda^2 = 0", d(d(P)), zero_like(d(d(P))))) return o;
  return compare("d_lambda[P,Q]_D = [d_lambda P,Q]_D + (-1)^m [P,d_lambda Q]_D", d(derived_bracket(P, Q, g)),
                 derived_bracket(d(P), Q, g) + sign_pow(m) * derived_bracket(P, d(Q), g));
}

inline Outcome theta_squared(Harness& H) {
  const auto& g = H.g();
  const std::size_t n = H.arity();
  const SkewCochain f = H.random(n);
  return compare("theta^2 f = (-1)^n (theta d - d theta) f", theta(theta(f, g), g),
                 sign_pow(n) * (theta(delta_hom(f, g), g) - delta_hom(theta(f, g), g)));
}

inline Outcome rb_lemma(Harness& H) {
  const auto& g = H.g();
  const Scalar lambda(H.coeff());
  const SkewCochain R = H.random(1);
  if (auto o = compare("[mu,R]_C = i_{thetaR} mu", cup_bracket(g.mu(), R, g), contract(theta(R, g), g.mu()))) return o;
  return compare("theta(d_lambda R) = -lambda [mu,thetaR]_NR", theta(d_lambda(R, g, lambda), g),
                 -lambda * nr_bracket(g.mu(), theta(R, g)));
}

/// A candidate relative operator: the known solution scaled, perturbed, or random.
inline SkewCochain relative_candidate(Harness& H, const HomLieAction& action, const Scalar& lambda) {
  const auto& h = action.acted();
  const auto& G = action.acting();
  switch (H.rng().uniform(0, 3)) {
    case 0: return projection_rb(action, lambda);
    case 1: return SkewCochain(h.space(), G.space(), 1);
    case 2: return projection_rb(action, lambda) + H.random(h.space(), G.space(), 1);
    default: return Scalar(H.coeff()) * projection_rb(action, lambda);
  }
}

inline Outcome relative_consistency(Harness& H) {
  const auto action = projection_action(H.g());
  const Scalar lambda(H.rng().uniform(-2, 2));
  const SkewCochain R = relative_candidate(H, action, lambda);
  const auto c = relative_rb_criteria(R, action, lambda);
  if (c.pointwise == c.graph && c.pointwise == c.maurer_cartan) return std::nullopt;
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return Mismatch{"pointwise vs graph vs Maurer-Cartan", {}, b(c.pointwise), b(c.graph) + " / " + b(c.maurer_cartan)};
}

inline Outcome d_R_matches_induced(Harness& H) {
  const auto action = projection_action(H.g());
  const Scalar lambda(H.rng().uniform(-2, 2));
  SkewCochain R = relative_candidate(H, action, lambda);
  if (!is_relative_rb(R, action, lambda)) R = projection_rb(action, lambda);
  const auto induced = induced_structures(R, action, lambda);
  const auto dR = CochainComplex::relative_rb(action, R, lambda);
  const auto dind = CochainComplex::hom_rep(induced.representation);
  const std::size_t top = std::min<std::size_t>(3, H.max_arity());
  for (std::size_t n = 1; n <= top; ++n) {
    for (const auto& f : dR.basis(n))
      if (auto o = compare("D_R vs induced delta, degree " + std::to_string(n), dR.apply(f), dind.apply(f))) return o;
  }
  return std::nullopt;
}

}  // namespace checks

using Checker = Outcome (*)(Harness&);

inline Checker checker(IdentityId id) {
  static constexpr std::array<Checker, kIdentityCount> table{
      checks::mc_homlie,           checks::nr_graded_lie,        checks::cup_graded_lie,       checks::cup_via_theta,
      checks::cup_via_delta,       checks::delta_cup_derivation, checks::cup_trivial_cohomology, checks::theta_cup_derivation,
      checks::pre_lie,             checks::rho_is_action,        checks::semidirect_jacobi,    checks::graph_delta_closed,
      checks::fn_graded_lie,       checks::fn_two_formulas,      checks::matched_pair_axioms,  checks::bicrossed_jacobi_psi,
      checks::graph_theta_closed,  checks::derived_graded_lie,   checks::derived_two_formulas, checks::d_lambda_derivation,
      checks::theta_squared,       checks::rb_lemma,             checks::relative_consistency, checks::d_R_matches_induced,
  };
  return table[static_cast<std::size_t>(number(id) - 1)];
}

/// Runs `trials` independent samples; the algebra must be multiplicative.
inline VerificationReport verify(IdentityId id, const HomLieAlgebra& g, const std::string& algebra_name, const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.identity = id;
  rep.algebra = algebra_name;
  rep.trials = cfg.trials;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::uint64_t s = trial_seed(cfg.seed, id, algebra_name, t);
    Rng rng(s);
    Harness H(g, rng, cfg);
    if (auto m = checker(id)(H)) rep.failures.push_back(Failure{t, s, m->check, m->witness, m->lhs, m->rhs});
  }
  return rep;
}

using NamedAlgebra = std::pair<std::string, HomLieAlgebra>;

inline std::vector<NamedAlgebra> default_fixtures() {
  return {
      {"abelian-2", fixtures::abelian(2)},
      {"fixture-b", fixtures::fixture_b()},
      {"threedim-0-2-3-0", HomLieAlgebra(fixtures::threedim(0, 2, 3, 0))},
      {"yau-sl2", fixtures::yau_sl2()},
      {"yau-heisenberg", fixtures::yau_heisenberg()},
      {"yau-gl2", fixtures::yau_gl2()},
  };
}

inline SuiteReport run_all(const std::vector<NamedAlgebra>& algebras, const SuiteConfig& cfg,
                           const std::vector<IdentityId>& ids = all_identities()) {
  SuiteReport out;
  out.config = cfg;
  for (const auto& [name, g] : algebras) {
    if (!check_multiplicative(g.raw())) throw UsageError("verify-theorems: algebra '" + name + "' is not multiplicative");
    for (auto id : ids) out.reports.push_back(verify(id, g, name, cfg));
  }
  return out;
}

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& v : r.reports) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : v.failures)
      fails.push_back({{"trial", f.trial}, {"seed", f.seed}, {"check", f.check}, {"witness", f.witness}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    results.push_back({{"algebra", v.algebra},
                       {"identity", std::string(name(v.identity))},
                       {"number", number(v.identity)},
                       {"trials", v.trials},
                       {"passed", v.passed()},
                       {"failures", fails}});
  }
  return {{"config", {{"seed", r.config.seed}, {"trials", r.config.trials}, {"max_arity", r.config.max_arity}}},
          {"passed", r.passed()},
          {"failure_count", r.failure_count()},
          {"results", results}};
}

}  // namespace homlie::suite
