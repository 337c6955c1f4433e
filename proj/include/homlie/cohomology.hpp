#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "homlie/brackets.hpp"
#include "homlie/differentials.hpp"
#include "homlie/operators.hpp"
#include "homlie/structures.hpp"

namespace homlie {

/// D_φ f = Df + [φ,f]_C on C(𝔤,𝔥).
inline SkewCochain d_phi(const SkewCochain& f, const HomMorphism& phi) {
  if (auto w = find_morphism_failure(phi)) throw StructureError("d_phi: " + w->describe());
  return d_trivial(f, phi.source) + cup_bracket(phi.as_cochain(), f, phi.target);
}

/// D_R f = d̃_λ f + [R,f]~_D on C(𝔥,𝔤).
inline SkewCochain d_R(const SkewCochain& f, const SkewCochain& R, const Scalar& lambda, const HomLieAction& action) {
  if (!relative_rb_defect(R, action, lambda).is_zero()) throw StructureError("d_R: operator fails the relative Rota-Baxter identity");
  return d_lambda_tilde(f, action.acted(), lambda) + derived_bracket_rel(R, f, action.representation());
}

enum class ComplexKind { hom_rep, trivial, morphism_twisted, scaled_trivial, relative, relative_rb };

inline std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::hom_rep: return "hom_rep";
    case ComplexKind::trivial: return "trivial";
    case ComplexKind::morphism_twisted: return "morphism_twisted";
    case ComplexKind::scaled_trivial: return "scaled_trivial";
    case ComplexKind::relative: return "relative";
    case ComplexKind::relative_rb: return "relative_rb";
  }
  return "?";
}

struct CohomologyReport {
  std::size_t degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_H() const { return dim_cocycles - dim_coboundaries; }
};

/// A cochain space C^•(domain, codomain) with one of the differentials.
/// Compatibility bases are computed once per degree.
class CochainComplex {
 public:
  using Differential = std::function<SkewCochain(const SkewCochain&)>;

  CochainComplex(ComplexKind kind, SpaceRef domain, SpaceRef codomain, std::size_t lowest, Differential d)
      : kind_(kind), domain_(std::move(domain)), codomain_(std::move(codomain)), lowest_(lowest), d_(std::move(d)),
        cache_(std::make_shared<Cache>()) {}

  static CochainComplex hom_rep(const Representation& rep) {
    return CochainComplex(ComplexKind::hom_rep, rep.algebra().space(), rep.module(), 0,
                          [rep](const SkewCochain& f) { return delta_hom(f, rep); });
  }
  /// D on C(𝔤, V); V defaults to 𝔤 itself.
  static CochainComplex trivial(const HomLieAlgebra& g, SpaceRef codomain = nullptr) {
    if (!codomain) codomain = g.space();
    return CochainComplex(ComplexKind::trivial, g.space(), codomain, 1, [g](const SkewCochain& f) { return d_trivial(f, g); });
  }
  static CochainComplex morphism(const HomMorphism& phi) {
    if (auto w = find_morphism_failure(phi)) throw StructureError("morphism complex: " + w->describe());
    return CochainComplex(ComplexKind::morphism_twisted, phi.source.space(), phi.target.space(), 1,
                          [phi](const SkewCochain& f) { return d_phi(f, phi); });
  }
  static CochainComplex scaled_trivial(const HomLieAlgebra& g, const Scalar& lambda) {
    return CochainComplex(ComplexKind::scaled_trivial, g.space(), g.space(), 1,
                          [g, lambda](const SkewCochain& f) { return d_lambda(f, g, lambda); });
  }
  /// d̃_λ on C(𝔥,𝔤) for an action of 𝔤 on 𝔥.
  static CochainComplex relative(const HomLieAction& action, const Scalar& lambda) {
    return CochainComplex(ComplexKind::relative, action.acted().space(), action.acting().space(), 1,
                          [action, lambda](const SkewCochain& f) { return d_lambda_tilde(f, action.acted(), lambda); });
  }
  static CochainComplex relative_rb(const HomLieAction& action, const SkewCochain& R, const Scalar& lambda) {
    if (!is_relative_rb(R, action, lambda)) throw StructureError("relative_rb complex: operator is not a relative Rota-Baxter operator");
    return CochainComplex(ComplexKind::relative_rb, action.acted().space(), action.acting().space(), 1,
                          [action, R, lambda](const SkewCochain& f) { return d_R(f, R, lambda, action); });
  }

  ComplexKind kind() const { return kind_; }
  const SpaceRef& domain() const { return domain_; }
  const SpaceRef& codomain() const { return codomain_; }
  std::size_t lowest_degree() const { return lowest_; }

  SkewCochain apply(const SkewCochain& f) const {
    if (f.arity() < lowest_) throw UsageError("degree below the start of the complex");
    return d_(f);
  }

  const std::vector<SkewCochain>& basis(std::size_t n) const {
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->bases[n];
    if (!slot) slot = std::make_unique<std::vector<SkewCochain>>(compatibility_basis(domain_, codomain_, n));
    return *slot;
  }

  /// Columns: flat coordinates of d(b) for each basis cochain b of degree n.
  Mat differential_matrix(std::size_t n) const {
    const auto& b = basis(n);
    std::vector<Vec> cols;
    for (const auto& c : b) cols.push_back(apply(c).flatten());
    const std::size_t rows = wedge_basis(domain_->dim(), n + 1).size() * codomain_->dim();
    return Mat::from_columns(cols, rows);
  }

  CohomologyReport cohomology(std::size_t n) const {
    if (n < lowest_) throw UsageError("degree below the start of the complex");
    CohomologyReport r;
    r.degree = n;
    r.dim_cochains = basis(n).size();
    r.dim_cocycles = r.dim_cochains - mat_rank(differential_matrix(n));
    if (n > lowest_) {
      // with a non-identity twist the degree-0 map of hom_rep can fail this
      if (auto k = square_zero_failure(n - 1))
        throw ConsistencyError("d∘d is nonzero on degree-" + std::to_string(n - 1) + " basis cochain " + std::to_string(*k) +
                               "; no cohomology in degree " + std::to_string(n));
      r.dim_coboundaries = mat_rank(differential_matrix(n - 1));
    }
    return r;
  }

  /// Some p with d(p) = c, or nullopt when c is not exact. c must be a cocycle.
  std::optional<SkewCochain> is_coboundary(const SkewCochain& c) const {
    const std::size_t n = c.arity();
    if (n < lowest_) throw UsageError("degree below the start of the complex");
    if (!apply(c).is_zero()) throw UsageError("is_coboundary: input is not a cocycle");
    if (n == lowest_) {
      if (!c.is_zero()) return std::nullopt;
      return SkewCochain(domain_, codomain_, n == 0 ? 0 : n - 1);
    }
    const auto& b = basis(n - 1);
    const auto x = solve_linear(differential_matrix(n - 1), c.flatten());
    if (!x) return std::nullopt;
    SkewCochain p(domain_, codomain_, n - 1);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (sgn((*x)[k]) != 0) p += (*x)[k] * b[k];
    return p;
  }

  /// First basis cochain of degree n whose image under d∘d is nonzero.
  std::optional<std::size_t> square_zero_failure(std::size_t n) const {
    const auto& b = basis(n);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!apply(apply(b[k])).is_zero()) return k;
    return std::nullopt;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, std::unique_ptr<std::vector<SkewCochain>>> bases;
  };

  ComplexKind kind_;
  SpaceRef domain_;
  SpaceRef codomain_;
  std::size_t lowest_;
  Differential d_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace homlie
