#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homlie/brackets.hpp"
#include "homlie/differentials.hpp"
#include "homlie/structures.hpp"

namespace homlie {

/// Arity-1 cochain from a matrix (columns are images of basis vectors).
inline SkewCochain operator_cochain(const Mat& m, SpaceRef domain, SpaceRef codomain) {
  if (m.cols() != domain->dim() || m.rows() != codomain->dim()) throw UsageError("operator matrix has the wrong shape");
  SkewCochain c(std::move(domain), std::move(codomain), 1);
  for (std::size_t i = 0; i < m.cols(); ++i) c.coeff(i) = m.column(i);
  return c;
}

inline Mat operator_matrix(const SkewCochain& c) {
  if (c.arity() != 1) throw UsageError("operator must have arity 1");
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < c.size(); ++i) cols.push_back(c.coeff(i));
  return Mat::from_columns(cols, c.codomain()->dim());
}

namespace detail {

inline Vec apply_op(const SkewCochain& op, const Vec& v) { return op({v}); }

/// First basis tuple where a defect cochain is nonzero; lhs is the defect, rhs zero.
inline std::optional<Witness> defect_witness(const SkewCochain& c, const std::string& what) {
  const auto& wb = c.basis();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.coeff(k).is_zero()) continue;
    std::vector<std::string> labels;
    for (auto i : wb.tuples[k]) labels.push_back(c.domain()->names()[i]);
    return Witness{what, wb.tuples[k], labels, c.coeff(k), Vec(c.codomain()->dim()), c.codomain()->names()};
  }
  return std::nullopt;
}

}  // namespace detail

/// [x,y]^N = [Nx,y] + [x,Ny] - N[x,y].
inline SkewCochain deformed_bracket_N(const SkewCochain& N, const HomLieAlgebra& g) {
  detail::require_endo(N, g, "deformed_bracket_N");
  return SkewCochain::tabulate(g.space(), g.space(), 2, [&](const std::vector<std::size_t>& t) {
    const Vec x = Vec::unit(g.dim(), t[0]), y = Vec::unit(g.dim(), t[1]);
    return g.bracket(N.coeff(t[0]), y) + g.bracket(x, N.coeff(t[1])) - detail::apply_op(N, g.bracket_basis(t[0], t[1]));
  });
}

/// (x,y) ↦ [Nx,Ny] - N[x,y]^N.
inline SkewCochain nijenhuis_defect(const SkewCochain& N, const HomLieAlgebra& g) {
  const SkewCochain def = deformed_bracket_N(N, g);
  return SkewCochain::tabulate(g.space(), g.space(), 2, [&](const std::vector<std::size_t>& t) {
    return g.bracket(N.coeff(t[0]), N.coeff(t[1])) - detail::apply_op(N, def.on_basis(t));
  });
}

/// Direct identity, cross-checked against [N,N]_FN = 0.
inline bool is_nijenhuis(const SkewCochain& N, const HomLieAlgebra& g) {
  require_compatible(N, "is_nijenhuis");
  const bool direct = nijenhuis_defect(N, g).is_zero();
  const bool mc = fn_bracket(N, N, g).is_zero();
  if (direct != mc) throw ConsistencyError("Nijenhuis criteria disagree (pointwise identity vs [N,N]_FN)");
  return direct;
}

struct SubCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct OperatorReport {
  bool ok = true;
  std::vector<SubCheck> checks;

  void add(std::string name, bool ok_, std::string detail = {}) {
    checks.push_back({std::move(name), ok_, std::move(detail)});
    ok = ok && ok_;
  }
};

inline const std::vector<Scalar>& deformation_parameters() {
  static const std::vector<Scalar> ts{Scalar(1), Scalar(-1), Scalar(1, 2), Scalar(3)};
  return ts;
}

/// Consequences of N being Nijenhuis: deformed algebra, N a morphism out of
/// it, and the pencil μ + t[,]^N.
inline OperatorReport nijenhuis_deformation_check(const SkewCochain& N, const HomLieAlgebra& g) {
  if (!is_nijenhuis(N, g)) throw UsageError("nijenhuis_deformation_check: operator is not Nijenhuis");
  OperatorReport r;
  const SkewCochain def = deformed_bracket_N(N, g);
  r.add("deformed bracket equals delta_hom N", def == delta_hom(N, g));
  RawHomStructure deformed(g.space(), def);
  const auto mult = multiplicativity_failures(deformed);
  r.add("deformed bracket multiplicative", mult.empty(), mult.empty() ? "" : mult.front().describe());
  const auto jac = find_hom_jacobi_failure(deformed);
  r.add("deformed bracket Hom-Jacobi", !jac, jac ? jac->describe() : "");
  if (mult.empty() && !jac) {
    HomMorphism phi(HomLieAlgebra(deformed), g, operator_matrix(N));
    const auto w = find_morphism_failure(phi);
    r.add("N is a morphism from the deformed algebra", !w, w ? w->describe() : "");
  }
  for (const auto& t : deformation_parameters()) {
    RawHomStructure pencil(g.space(), g.mu() + t * def);
    const auto w = find_hom_jacobi_failure(pencil);
    r.add("mu + " + to_string(t) + "*[,]^N Hom-Jacobi", !w, w ? w->describe() : "");
  }
  r.add("delta_hom([N,N]_FN) = 0", delta_hom(fn_bracket(N, N, g), g).is_zero());
  return r;
}

/// [x,y]^R = [Rx,y] + [x,Ry] + λ[x,y].
inline SkewCochain rb_deformed_bracket(const SkewCochain& R, const HomLieAlgebra& g, const Scalar& lambda) {
  detail::require_endo(R, g, "rb_deformed_bracket");
  return SkewCochain::tabulate(g.space(), g.space(), 2, [&](const std::vector<std::size_t>& t) {
    const Vec x = Vec::unit(g.dim(), t[0]), y = Vec::unit(g.dim(), t[1]);
    return g.bracket(R.coeff(t[0]), y) + g.bracket(x, R.coeff(t[1])) + lambda * g.bracket_basis(t[0], t[1]);
  });
}

/// (x,y) ↦ [Rx,Ry] - R([x,y]^R).
inline SkewCochain rota_baxter_defect(const SkewCochain& R, const HomLieAlgebra& g, const Scalar& lambda) {
  const SkewCochain def = rb_deformed_bracket(R, g, lambda);
  return SkewCochain::tabulate(g.space(), g.space(), 2, [&](const std::vector<std::size_t>& t) {
    return g.bracket(R.coeff(t[0]), R.coeff(t[1])) - detail::apply_op(R, def.on_basis(t));
  });
}

/// Which differential graded Lie algebra a Maurer-Cartan residual lives in.
enum class DglaKind { morphism, derived, relative_derived };

inline SkewCochain mc_residual_morphism(const SkewCochain& phi, const HomLieAlgebra& source, const HomLieAlgebra& target) {
  if (phi.arity() != 1) throw UsageError("mc_residual: element must have arity 1");
  require_compatible(phi, "mc_residual");
  return d_trivial(phi, source) + Scalar(1, 2) * cup_bracket(phi, phi, target);
}

inline SkewCochain mc_residual_derived(const SkewCochain& R, const HomLieAlgebra& g, const Scalar& lambda) {
  if (R.arity() != 1) throw UsageError("mc_residual: element must have arity 1");
  require_compatible(R, "mc_residual");
  return d_lambda(R, g, lambda) + Scalar(1, 2) * derived_bracket(R, R, g);
}

inline SkewCochain mc_residual_relative(const SkewCochain& R, const HomLieAction& action, const Scalar& lambda) {
  if (R.arity() != 1) throw UsageError("mc_residual: element must have arity 1");
  require_compatible(R, "mc_residual");
  return d_lambda_tilde(R, action.acted(), lambda) +
         Scalar(1, 2) * derived_bracket_rel(R, R, action.representation());
}

inline DglaKind parse_dgla_kind(const std::string& s) {
  if (s == "morphism") return DglaKind::morphism;
  if (s == "derived") return DglaKind::derived;
  if (s == "relative-derived" || s == "relative_derived") return DglaKind::relative_derived;
  throw UsageError("unknown dgla kind \"" + s + "\"");
}

/// Direct identity, cross-checked against d_λR + ½[R,R]_D = 0.
inline bool is_rota_baxter(const SkewCochain& R, const HomLieAlgebra& g, const Scalar& lambda) {
  require_compatible(R, "is_rota_baxter");
  const bool direct = rota_baxter_defect(R, g, lambda).is_zero();
  const bool mc = mc_residual_derived(R, g, lambda).is_zero();
  if (direct != mc) throw ConsistencyError("Rota-Baxter criteria disagree (pointwise identity vs Maurer-Cartan)");
  return direct;
}

/// (h,k) ↦ [Rh,Rk] - R(Rh⋄k - Rk⋄h + λ[h,k]).
inline SkewCochain relative_rb_defect(const SkewCochain& R, const HomLieAction& action, const Scalar& lambda) {
  const auto& g = action.acting();
  const auto& h = action.acted();
  require_same_space(R.domain(), h.space(), "relative_rb");
  require_same_space(R.codomain(), g.space(), "relative_rb");
  if (R.arity() != 1) throw UsageError("relative_rb: operator must have arity 1");
  return SkewCochain::tabulate(h.space(), g.space(), 2, [&](const std::vector<std::size_t>& t) {
    const Vec ei = Vec::unit(h.dim(), t[0]), ej = Vec::unit(h.dim(), t[1]);
    const Vec inner = action.act(R.coeff(t[0]), ej) - action.act(R.coeff(t[1]), ei) + lambda * h.bracket_basis(t[0], t[1]);
    return g.bracket(R.coeff(t[0]), R.coeff(t[1])) - detail::apply_op(R, inner);
  });
}

/// Gr(R) = {(Rh,h)} closed under the weight-λ semidirect bracket.
inline bool graph_is_subalgebra(const SkewCochain& R, const HomLieAction& action, const Scalar& lambda) {
  const HomLieAlgebra sd = semidirect_weight(action, lambda);
  const std::size_t dg = action.acting().dim(), dh = action.acted().dim();
  auto lift = [&](std::size_t i) {
    Vec v(dg + dh);
    for (std::size_t a = 0; a < dg; ++a) v[a] = R.coeff(i)[a];
    v[dg + i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = i + 1; j < dh; ++j) {
      const Vec b = sd.bracket(lift(i), lift(j));
      Vec upper(dg), lower(dh);
      for (std::size_t a = 0; a < dg; ++a) upper[a] = b[a];
      for (std::size_t a = 0; a < dh; ++a) lower[a] = b[dg + a];
      if (!(upper == detail::apply_op(R, lower))) return false;
    }
  return true;
}

struct RelativeRBCriteria {
  bool pointwise;
  bool graph;
  bool maurer_cartan;
};

inline RelativeRBCriteria relative_rb_criteria(const SkewCochain& R, const HomLieAction& action, const Scalar& lambda) {
  return {relative_rb_defect(R, action, lambda).is_zero(), graph_is_subalgebra(R, action, lambda),
          mc_residual_relative(R, action, lambda).is_zero()};
}

/// Three criteria; any disagreement is a consistency failure.
inline bool is_relative_rb(const SkewCochain& R, const HomLieAction& action, const Scalar& lambda) {
  require_compatible(R, "is_relative_rb");
  const auto c = relative_rb_criteria(R, action, lambda);
  if (c.pointwise != c.graph || c.pointwise != c.maurer_cartan)
    throw ConsistencyError("relative Rota-Baxter criteria disagree (pointwise " + std::to_string(c.pointwise) +
                           ", graph " + std::to_string(c.graph) + ", Maurer-Cartan " + std::to_string(c.maurer_cartan) + ")");
  return c.pointwise;
}

/// Induced Hom-Lie algebra (𝔥,[,]^R,β) and its representation (𝔤,⋄̃,α).
struct InducedStructures {
  HomLieAlgebra algebra;
  Representation representation;
};

inline SkewCochain induced_bracket(const SkewCochain& R, const HomLieAction& action, const Scalar& lambda) {
  const auto& h = action.acted();
  return SkewCochain::tabulate(h.space(), h.space(), 2, [&](const std::vector<std::size_t>& t) {
    const Vec ei = Vec::unit(h.dim(), t[0]), ej = Vec::unit(h.dim(), t[1]);
    return action.act(R.coeff(t[0]), ej) - action.act(R.coeff(t[1]), ei) + lambda * h.bracket_basis(t[0], t[1]);
  });
}

inline InducedStructures induced_structures(const SkewCochain& R, const HomLieAction& action, const Scalar& lambda) {
  if (!is_relative_rb(R, action, lambda)) throw UsageError("induced_structures: not a relative Rota-Baxter operator");
  const auto& g = action.acting();
  const auto& h = action.acted();
  HomLieAlgebra hR(h.space(), induced_bracket(R, action, lambda));  // throws StructureError with witness
  BilinearMap tilde(h.dim(), g.dim(), g.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t x = 0; x < g.dim(); ++x) {
      const Vec ex = Vec::unit(g.dim(), x), ei = Vec::unit(h.dim(), i);
      tilde.on_basis(i, x) = g.bracket(R.coeff(i), ex) + detail::apply_op(R, action.act(ex, ei));
    }
  Representation rep(hR, g.space(), std::move(tilde));
  if (auto w = find_representation_failure(rep)) throw StructureError("induced representation: " + w->describe());
  HomMorphism phi(hR, g, operator_matrix(R));
  if (auto w = find_morphism_failure(phi)) throw StructureError("R is not a morphism from the induced algebra: " + w->describe());
  return {std::move(hR), std::move(rep)};
}

/// Every combination of compatibility-basis coordinates drawn from `values`
/// for which `accept` holds.
inline std::vector<SkewCochain> search_operators(const SpaceRef& domain, const SpaceRef& codomain, const std::vector<Scalar>& values,
                                                 const std::function<bool(const SkewCochain&)>& accept) {
  const auto basis = compatibility_basis(domain, codomain, 1);
  std::vector<SkewCochain> found;
  std::vector<std::size_t> digit(basis.size(), 0);
  while (true) {
    SkewCochain c(domain, codomain, 1);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (sgn(values[digit[k]]) != 0) c += values[digit[k]] * basis[k];
    if (accept(c)) found.push_back(std::move(c));
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == values.size()) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return found;
}

inline const std::vector<Scalar>& default_search_values() {
  static const std::vector<Scalar> v{Scalar(-1), Scalar(0), Scalar(1)};
  return v;
}

inline std::vector<SkewCochain> search_nijenhuis(const HomLieAlgebra& g, const std::vector<Scalar>& values = default_search_values()) {
  return search_operators(g.space(), g.space(), values, [&](const SkewCochain& N) { return is_nijenhuis(N, g); });
}

inline std::vector<SkewCochain> search_rota_baxter(const HomLieAlgebra& g, const Scalar& lambda,
                                                   const std::vector<Scalar>& values = default_search_values()) {
  return search_operators(g.space(), g.space(), values, [&](const SkewCochain& R) { return is_rota_baxter(R, g, lambda); });
}

inline std::vector<SkewCochain> search_relative_rb(const HomLieAction& action, const Scalar& lambda,
                                                   const std::vector<Scalar>& values = default_search_values()) {
  return search_operators(action.acted().space(), action.acting().space(), values,
                          [&](const SkewCochain& R) { return is_relative_rb(R, action, lambda); });
}

}  // namespace homlie
