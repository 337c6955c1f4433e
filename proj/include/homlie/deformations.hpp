#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homlie/brackets.hpp"
#include "homlie/cohomology.hpp"
#include "homlie/structures.hpp"

namespace homlie {

/// φ_t = φ_0 + t φ_1 + ... + t^N φ_N, φ_0 the base morphism.
struct MorphismDeformation {
  HomMorphism base;
  std::vector<SkewCochain> terms;  // terms[0] = base.as_cochain()

  explicit MorphismDeformation(HomMorphism phi) : base(std::move(phi)) { terms.push_back(base.as_cochain()); }
  MorphismDeformation(HomMorphism phi, std::vector<SkewCochain> higher) : MorphismDeformation(std::move(phi)) {
    for (auto& t : higher) {
      require_same_space(t.domain(), base.source.space(), "deformation term");
      require_same_space(t.codomain(), base.target.space(), "deformation term");
      if (t.arity() != 1) throw UsageError("deformation terms must have arity 1");
      terms.push_back(std::move(t));
    }
  }

  std::size_t order() const { return terms.size() - 1; }
};

/// First failure of φ_n[x,y] = Σ_{i+j=n}[φ_i x, φ_j y] or of twist compatibility.
inline std::optional<Witness> find_deformation_failure(const MorphismDeformation& d) {
  if (auto w = find_morphism_failure(d.base)) return w;
  const auto& g = d.base.source;
  const auto& h = d.base.target;
  const auto& gn = g.space()->names();
  const auto& hn = h.space()->names();
  for (std::size_t n = 1; n <= d.order(); ++n) {
    if (auto w = detail::defect_witness(compatibility_defect(d.terms[n]), "twist compatibility of term " + std::to_string(n)))
      return w;
    for (std::size_t x = 0; x < g.dim(); ++x)
      for (std::size_t y = x + 1; y < g.dim(); ++y) {
        const Vec lhs = d.terms[n]({g.bracket_basis(x, y)});
        Vec rhs(h.dim());
        for (std::size_t i = 0; i <= n; ++i) rhs += h.bracket(d.terms[i].coeff(x), d.terms[n - i].coeff(y));
        if (!(lhs == rhs)) return Witness{"order " + std::to_string(n) + " equation", {x, y}, {gn[x], gn[y]}, lhs, rhs, hn};
      }
  }
  return std::nullopt;
}

inline bool check_order_deformation(const MorphismDeformation& d) { return !find_deformation_failure(d); }

struct ObstructionClass {
  SkewCochain cocycle;
  std::optional<SkewCochain> preimage;  // some p with D_φ p = cocycle
  bool is_coboundary() const { return preimage.has_value(); }
};

/// -1/2 Σ_{i+j=N+1, i,j≥1} [φ_i, φ_j]_C.
inline SkewCochain obstruction_cocycle(const MorphismDeformation& d) {
  const std::size_t next = d.order() + 1;
  SkewCochain ob(d.base.source.space(), d.base.target.space(), 2);
  for (std::size_t i = 1; i < next; ++i) ob += cup_bracket(d.terms[i], d.terms[next - i], d.base.target);
  ob *= Scalar(-1, 2);
  return ob;
}

inline ObstructionClass obstruction(const MorphismDeformation& d) {
  if (auto w = find_deformation_failure(d)) throw UsageError("obstruction: not a valid deformation: " + w->describe());
  const auto complex = CochainComplex::morphism(d.base);
  SkewCochain ob = obstruction_cocycle(d);
  if (!complex.apply(ob).is_zero()) throw ConsistencyError("obstruction is not a D_phi cocycle");
  auto pre = complex.is_coboundary(ob);
  return ObstructionClass{std::move(ob), std::move(pre)};
}

/// Order N+1 deformation with D_φ φ_{N+1} = Ob, or nullopt when the class is nonzero.
inline std::optional<MorphismDeformation> extend(const MorphismDeformation& d) {
  auto ob = obstruction(d);
  if (!ob.preimage) return std::nullopt;
  MorphismDeformation next = d;
  next.terms.push_back(std::move(*ob.preimage));
  if (auto w = find_deformation_failure(next)) throw ConsistencyError("extension does not re-validate: " + w->describe());
  return next;
}

}  // namespace homlie
