#pragma once

#include <cstddef>
#include <vector>

#include "homlie/multilinear.hpp"
#include "homlie/structures.hpp"

namespace homlie {

namespace detail {

/// Σ_{p<q} (-1)^{p+q} f([x_p,x_q], α x_rest...) on basis tuple x (0-based
/// positions, so the sign matches the 1-based formula).
inline Vec bracket_insertion_sum(const SkewCochain& f, const RawHomStructure& g, const std::vector<std::size_t>& x) {
  const std::size_t n1 = x.size();
  Vec out(f.codomain()->dim());
  std::vector<Vec> args(f.arity());
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t q = p + 1; q < n1; ++q) {
      args[0] = g.bracket_basis(x[p], x[q]);
      if (args[0].is_zero()) continue;
      std::size_t k = 1;
      for (std::size_t r = 0; r < n1; ++r)
        if (r != p && r != q) args[k++] = g.space->power_on_basis(1, x[r]);
      const Vec v = f(args);
      if ((p + q) % 2 == 0) out += v;
      else out -= v;
    }
  return out;
}

}  // namespace detail

/// Hom-Lie differential with coefficients in a representation. Arity 0 is a
/// vector v with βv = v and (δv)(x) = x⋄v.
inline SkewCochain delta_hom(const SkewCochain& f, const Representation& rep) {
  const auto& g = rep.algebra();
  require_same_space(f.domain(), g.space(), "delta_hom");
  require_same_space(f.codomain(), rep.module(), "delta_hom");
  require_compatible(f, "delta_hom");
  const std::size_t n = f.arity();
  if (n == 0) {
    const Vec v = f.coeff(0);
    return SkewCochain::tabulate(f.domain(), f.codomain(), 1, [&](const std::vector<std::size_t>& x) {
      return rep.act(Vec::unit(g.dim(), x[0]), v);
    });
  }
  const auto& gs = *g.space();
  return SkewCochain::tabulate(f.domain(), f.codomain(), n + 1, [&](const std::vector<std::size_t>& x) {
    Vec out = detail::bracket_insertion_sum(f, g.raw(), x);
    std::vector<std::size_t> rest(n);
    for (std::size_t p = 0; p <= n; ++p) {
      for (std::size_t r = 0, k = 0; r <= n; ++r)
        if (r != p) rest[k++] = x[r];
      const Vec v = rep.act(gs.power_on_basis(n - 1, x[p]), f.on_basis(rest));
      if (p % 2 == 0) out += v;
      else out -= v;
    }
    return out;
  });
}

/// Adjoint coefficients.
inline SkewCochain delta_hom(const SkewCochain& f, const HomLieAlgebra& g) {
  return delta_hom(f, adjoint_representation(g));
}

/// D: trivial-coefficient differential using only the bracket of the domain.
inline SkewCochain d_trivial(const SkewCochain& f, const HomLieAlgebra& domain) {
  require_same_space(f.domain(), domain.space(), "d_trivial");
  require_compatible(f, "d_trivial");
  if (f.arity() == 0) return SkewCochain(f.domain(), f.codomain(), 1);
  return SkewCochain::tabulate(f.domain(), f.codomain(), f.arity() + 1, [&](const std::vector<std::size_t>& x) {
    return detail::bracket_insertion_sum(f, domain.raw(), x);
  });
}

/// δ^tr f = -i_μ f on C(𝔤,𝔤).
inline SkewCochain delta_tr(const SkewCochain& f, const HomLieAlgebra& g) {
  require_same_space(f.codomain(), g.space(), "delta_tr");
  return -contract(g.mu(), f);
}

inline SkewCochain d_lambda(const SkewCochain& f, const HomLieAlgebra& g, const Scalar& lambda) {
  return lambda * delta_tr(f, g);
}

/// d̃_λ on C(𝔥,𝔤): λ times the trivial differential of 𝔥.
inline SkewCochain d_lambda_tilde(const SkewCochain& f, const HomLieAlgebra& h, const Scalar& lambda) {
  return lambda * d_trivial(f, h);
}

}  // namespace homlie
