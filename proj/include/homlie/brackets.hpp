#pragma once

#include <cstddef>
#include <vector>

#include "homlie/differentials.hpp"
#include "homlie/multilinear.hpp"
#include "homlie/structures.hpp"

namespace homlie {

inline int sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

namespace detail {

inline void require_positive_arity(const SkewCochain& c, const char* what) {
  if (c.arity() == 0) throw UsageError(std::string(what) + ": arity-0 cochains are not accepted");
}

inline void require_endo(const SkewCochain& c, const HomLieAlgebra& g, const char* what) {
  require_same_space(c.domain(), g.space(), what);
  require_same_space(c.codomain(), g.space(), what);
  require_positive_arity(c, what);
}

}  // namespace detail

/// [P,Q]_NR = i_P Q - (-1)^{(m-1)(n-1)} i_Q P. Needs only the twisted space.
inline SkewCochain nr_bracket(const SkewCochain& P, const SkewCochain& Q) {
  detail::require_positive_arity(P, "nr_bracket");
  detail::require_positive_arity(Q, "nr_bracket");
  require_same_space(P.domain(), P.codomain(), "nr_bracket");
  require_same_space(Q.domain(), Q.codomain(), "nr_bracket");
  const std::size_t m = P.arity(), n = Q.arity();
  return contract(P, Q) - sign_pow((m - 1) * (n - 1)) * contract(Q, P);
}

/// Cup product into the Hom-Lie algebra h (the common codomain).
inline SkewCochain cup_bracket(const SkewCochain& P, const SkewCochain& Q, const HomLieAlgebra& h) {
  detail::require_positive_arity(P, "cup_bracket");
  detail::require_positive_arity(Q, "cup_bracket");
  require_same_space(P.domain(), Q.domain(), "cup_bracket");
  require_same_space(P.codomain(), h.space(), "cup_bracket");
  require_same_space(Q.codomain(), h.space(), "cup_bracket");
  const std::size_t m = P.arity(), n = Q.arity();
  const Mat& bp = h.space()->power(n - 1);
  const Mat& bq = h.space()->power(m - 1);
  const auto& sh = shuffles({m, n});
  return SkewCochain::tabulate(P.domain(), h.space(), m + n, [&](const std::vector<std::size_t>& x) {
    Vec out(h.dim());
    std::vector<std::size_t> a(m), b(n);
    for (const auto& s : sh) {
      for (std::size_t i = 0; i < m; ++i) a[i] = x[s.perm[i]];
      for (std::size_t i = 0; i < n; ++i) b[i] = x[s.perm[m + i]];
      const Vec pa = P.on_basis(a);
      if (pa.is_zero()) continue;
      const Vec qb = Q.on_basis(b);
      if (qb.is_zero()) continue;
      out.add_scaled(Scalar(s.sign), h.bracket(bp * pa, bq * qb));
    }
    return out;
  });
}

/// θf = -i_f μ.
inline SkewCochain theta(const SkewCochain& f, const HomLieAlgebra& g) {
  detail::require_endo(f, g, "theta");
  return -contract(f, g.mu());
}

/// Frölicher-Nijenhuis bracket, defining formula.
inline SkewCochain fn_bracket(const SkewCochain& P, const SkewCochain& Q, const HomLieAlgebra& g) {
  detail::require_endo(P, g, "fn_bracket");
  detail::require_endo(Q, g, "fn_bracket");
  const std::size_t m = P.arity(), n = Q.arity();
  return cup_bracket(P, Q, g) + sign_pow(m) * contract(delta_hom(P, g), Q) -
         sign_pow((m + 1) * n) * contract(delta_hom(Q, g), P);
}

/// Derived bracket, defining formula.
inline SkewCochain derived_bracket(const SkewCochain& P, const SkewCochain& Q, const HomLieAlgebra& g) {
  detail::require_endo(P, g, "derived_bracket");
  detail::require_endo(Q, g, "derived_bracket");
  const std::size_t m = P.arity(), n = Q.arity();
  return cup_bracket(P, Q, g) + contract(theta(P, g), Q) - sign_pow(m * n) * contract(theta(Q, g), P);
}

/// θ̃P(h_1..h_{n+1}) = Σ_i (-1)^{n+i} P(..ĥ_i..) ⋄ β^{n-1} h_i, for P: 𝔥 → 𝔤
/// and a representation of 𝔤 on 𝔥.
inline SkewCochain theta_tilde(const SkewCochain& P, const Representation& rep) {
  detail::require_positive_arity(P, "theta_tilde");
  require_same_space(P.domain(), rep.module(), "theta_tilde");
  require_same_space(P.codomain(), rep.algebra().space(), "theta_tilde");
  const std::size_t n = P.arity();
  const auto& H = *rep.module();
  return SkewCochain::tabulate(P.domain(), P.domain(), n + 1, [&](const std::vector<std::size_t>& x) {
    Vec out(H.dim());
    std::vector<std::size_t> rest(n);
    for (std::size_t p = 0; p <= n; ++p) {
      for (std::size_t r = 0, k = 0; r <= n; ++r)
        if (r != p) rest[k++] = x[r];
      const Vec v = rep.act(P.on_basis(rest), H.power_on_basis(n - 1, x[p]));
      // 1-based i = p+1, sign (-1)^{n+p+1}
      if ((n + p + 1) % 2 == 0) out += v;
      else out -= v;
    }
    return out;
  });
}

/// Relative derived bracket on C(𝔥,𝔤); the cup product uses 𝔤's bracket.
inline SkewCochain derived_bracket_rel(const SkewCochain& P, const SkewCochain& Q, const Representation& rep) {
  const std::size_t m = P.arity(), n = Q.arity();
  return cup_bracket(P, Q, rep.algebra()) + contract_mixed(theta_tilde(P, rep), Q) -
         sign_pow(m * n) * contract_mixed(theta_tilde(Q, rep), P);
}

/// (P, E) with P ∈ C^{m+1}(𝔤,𝔤), E ∈ C^m(𝔤,𝔥); degree m ≥ 1.
struct GradedPair {
  SkewCochain upper;
  SkewCochain lower;

  GradedPair(SkewCochain p, SkewCochain e) : upper(std::move(p)), lower(std::move(e)) {
    if (upper.arity() != lower.arity() + 1) throw UsageError("graded pair: arities must differ by one");
    if (lower.arity() == 0) throw UsageError("graded pair: degree must be at least 1");
  }
  std::size_t degree() const { return lower.arity(); }

  friend bool operator==(const GradedPair& a, const GradedPair& b) { return a.upper == b.upper && a.lower == b.lower; }
  GradedPair& operator+=(const GradedPair& o) {
    upper += o.upper;
    lower += o.lower;
    return *this;
  }
  friend GradedPair operator+(GradedPair a, const GradedPair& b) { return a += b; }
  friend GradedPair operator*(int s, GradedPair a) {
    a.upper *= Scalar(s);
    a.lower *= Scalar(s);
    return a;
  }
  friend GradedPair operator-(GradedPair a, const GradedPair& b) { return a += (-1) * b; }
};

/// [(P,E),(Q,F)]_⋉ = ([P,Q]_NR, [E,F]_C + i_P F - (-1)^{mn} i_Q E).
inline GradedPair semidirect_graded_bracket(const GradedPair& a, const GradedPair& b, const HomLieAlgebra& h) {
  const std::size_t m = a.degree(), n = b.degree();
  return GradedPair(nr_bracket(a.upper, b.upper), cup_bracket(a.lower, b.lower, h) + contract(a.upper, b.lower) -
                                                      sign_pow(m * n) * contract(b.upper, a.lower));
}

/// Bicrossed bracket of the NR and FN algebras (𝔥 = 𝔤).
inline GradedPair bicrossed_bracket(const GradedPair& a, const GradedPair& b, const HomLieAlgebra& g) {
  const std::size_t m = a.degree(), n = b.degree();
  const int s = sign_pow(m * n);
  return GradedPair(nr_bracket(a.upper, b.upper) + fn_bracket(a.lower, b.upper, g) - s * fn_bracket(b.lower, a.upper, g),
                    fn_bracket(a.lower, b.lower, g) + contract(a.upper, b.lower) - s * contract(b.upper, a.lower));
}

/// ρ(P)E = i_P E.
inline SkewCochain rho_action(const SkewCochain& P, const SkewCochain& E) { return contract(P, E); }

/// ψ(E)P = [E,P]_FN.
inline SkewCochain psi_action(const SkewCochain& E, const SkewCochain& P, const HomLieAlgebra& g) {
  return fn_bracket(E, P, g);
}

}  // namespace homlie
