#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homlie/linalg.hpp"
#include "homlie/multilinear.hpp"
#include "homlie/scalar.hpp"

namespace homlie {

/// "3·h - 1/2·e1"; unit coefficients drop the factor, zero prints "0".
inline std::string format_vector(const Vec& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Scalar& c = v[i];
    if (sgn(c) == 0) continue;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << to_string(mag) << "·";
    os << names.at(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

/// Where an axiom failed: the basis indices involved and both sides.
struct Witness {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::vector<std::string> labels;  // basis names for indices
  Vec lhs;
  Vec rhs;
  std::vector<std::string> value_names;  // names to print lhs/rhs with

  std::string describe() const {
    std::string where = "(";
    for (std::size_t k = 0; k < labels.size(); ++k) where += (k ? "," : "") + labels[k];
    where += ")";
    return axiom + " fails at " + where + ": " + format_vector(lhs, value_names) + " vs " +
           format_vector(rhs, value_names);
  }
};

/// Bilinear map L × R → O on basis tables.
class BilinearMap {
 public:
  BilinearMap(std::size_t left, std::size_t right, std::size_t out)
      : left_(left), right_(right), out_(out), table_(left * right, Vec(out)) {}

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }

  const Vec& on_basis(std::size_t i, std::size_t j) const { return table_.at(i * right_ + j); }
  Vec& on_basis(std::size_t i, std::size_t j) { return table_.at(i * right_ + j); }

  Vec operator()(const Vec& x, const Vec& v) const {
    if (x.dim() != left_ || v.dim() != right_) throw UsageError("bilinear map argument dimension mismatch");
    Vec out(out_);
    for (std::size_t i = 0; i < left_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < right_; ++j) {
        if (sgn(v[j]) == 0) continue;
        out.add_scaled(x[i] * v[j], on_basis(i, j));
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& v : table_)
      if (!v.is_zero()) return false;
    return true;
  }
  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.out_ == b.out_ && a.table_ == b.table_;
  }

 private:
  std::size_t left_, right_, out_;
  std::vector<Vec> table_;
};

/// Bracket plus twist with no axioms enforced beyond skew-symmetry.
struct RawHomStructure {
  SpaceRef space;
  SkewCochain mu;

  RawHomStructure(SpaceRef s, SkewCochain m) : space(std::move(s)), mu(std::move(m)) {
    if (mu.arity() != 2) throw UsageError("bracket must have arity 2");
    require_same_space(space, mu.domain(), "structure");
    require_same_space(space, mu.codomain(), "structure");
  }

  Vec bracket(const Vec& x, const Vec& y) const { return mu({x, y}); }
  Vec bracket_basis(std::size_t i, std::size_t j) const { return mu.on_basis({i, j}); }
};

inline std::optional<Witness> find_hom_jacobi_failure(const RawHomStructure& s) {
  const auto& sp = *s.space;
  const std::size_t n = sp.dim();
  auto br = [&](const Vec& a, const Vec& b) { return s.bracket(a, b); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ai = sp.power_on_basis(1, i), aj = sp.power_on_basis(1, j), ak = sp.power_on_basis(1, k);
        Vec sum = br(ai, s.bracket_basis(j, k));
        sum += br(aj, s.bracket_basis(k, i));
        sum += br(ak, s.bracket_basis(i, j));
        if (!sum.is_zero())
          return Witness{"Hom-Jacobi", {i, j, k}, {sp.names()[i], sp.names()[j], sp.names()[k]}, sum, Vec(n), sp.names()};
      }
  return std::nullopt;
}

inline bool check_hom_jacobi(const RawHomStructure& s) { return !find_hom_jacobi_failure(s); }

/// Every pair where α[x,y] != [αx,αy].
inline std::vector<Witness> multiplicativity_failures(const RawHomStructure& s) {
  const auto& sp = *s.space;
  std::vector<Witness> out;
  for (std::size_t i = 0; i < sp.dim(); ++i)
    for (std::size_t j = i + 1; j < sp.dim(); ++j) {
      Vec lhs = sp.twist() * s.bracket_basis(i, j);
      Vec rhs = s.bracket(sp.power_on_basis(1, i), sp.power_on_basis(1, j));
      if (!(lhs == rhs))
        out.push_back(Witness{"multiplicativity", {i, j}, {sp.names()[i], sp.names()[j]}, lhs, rhs, sp.names()});
    }
  return out;
}

inline bool check_multiplicative(const RawHomStructure& s) { return is_compatible(s.mu); }

/// Multiplicative Hom-Lie algebra; both axioms are checked on construction.
class HomLieAlgebra {
 public:
  explicit HomLieAlgebra(RawHomStructure raw) : raw_(std::move(raw)) {
    const auto bad = multiplicativity_failures(raw_);
    if (!bad.empty()) throw StructureError("not multiplicative: " + bad.front().describe());
    if (auto w = find_hom_jacobi_failure(raw_)) throw StructureError(w->describe());
  }
  HomLieAlgebra(SpaceRef space, SkewCochain mu) : HomLieAlgebra(RawHomStructure(std::move(space), std::move(mu))) {}

  const SpaceRef& space() const { return raw_.space; }
  const SkewCochain& mu() const { return raw_.mu; }
  const RawHomStructure& raw() const { return raw_; }
  std::size_t dim() const { return raw_.space->dim(); }
  const Mat& twist() const { return raw_.space->twist(); }

  Vec bracket(const Vec& x, const Vec& y) const { return raw_.bracket(x, y); }
  Vec bracket_basis(std::size_t i, std::size_t j) const { return raw_.bracket_basis(i, j); }

 private:
  RawHomStructure raw_;
};

/// (V, ⋄, β) over a Hom-Lie algebra 𝔤.
class Representation {
 public:
  Representation(HomLieAlgebra algebra, SpaceRef module, BilinearMap action)
      : algebra_(std::move(algebra)), module_(std::move(module)), action_(std::move(action)) {
    if (action_.left_dim() != algebra_.dim() || action_.right_dim() != module_->dim() ||
        action_.out_dim() != module_->dim())
      throw UsageError("action table does not fit the algebra and module dimensions");
  }

  const HomLieAlgebra& algebra() const { return algebra_; }
  const SpaceRef& module() const { return module_; }
  const BilinearMap& action() const { return action_; }
  Vec act(const Vec& x, const Vec& v) const { return action_(x, v); }

 private:
  HomLieAlgebra algebra_;
  SpaceRef module_;
  BilinearMap action_;
};

inline std::optional<Witness> find_representation_failure(const Representation& r) {
  const auto& g = r.algebra();
  const auto& gs = *g.space();
  const auto& V = *r.module();
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t v = 0; v < V.dim(); ++v) {
      Vec lhs = V.twist() * r.action().on_basis(x, v);
      Vec rhs = r.act(gs.power_on_basis(1, x), V.power_on_basis(1, v));
      if (!(lhs == rhs)) return Witness{"twist equivariance", {x, v}, {gs.names()[x], V.names()[v]}, lhs, rhs, V.names()};
    }
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = x + 1; y < g.dim(); ++y)
      for (std::size_t v = 0; v < V.dim(); ++v) {
        const Vec ex = Vec::unit(g.dim(), x), ey = Vec::unit(g.dim(), y), ev = Vec::unit(V.dim(), v);
        Vec lhs = r.act(g.bracket_basis(x, y), V.power_on_basis(1, v));
        Vec rhs = r.act(gs.power_on_basis(1, x), r.act(ey, ev)) - r.act(gs.power_on_basis(1, y), r.act(ex, ev));
        if (!(lhs == rhs))
          return Witness{"representation", {x, y, v}, {gs.names()[x], gs.names()[y], V.names()[v]}, lhs, rhs, V.names()};
      }
  return std::nullopt;
}

inline bool check_representation(const Representation& r) { return !find_representation_failure(r); }

/// Action of 𝔤 on another Hom-Lie algebra 𝔥 by Hom-derivations.
class HomLieAction {
 public:
  HomLieAction(Representation rep, HomLieAlgebra acted) : rep_(std::move(rep)), acted_(std::move(acted)) {
    require_same_space(rep_.module(), acted_.space(), "action");
  }

  const HomLieAlgebra& acting() const { return rep_.algebra(); }
  const HomLieAlgebra& acted() const { return acted_; }
  const Representation& representation() const { return rep_; }
  Vec act(const Vec& x, const Vec& h) const { return rep_.act(x, h); }

 private:
  Representation rep_;
  HomLieAlgebra acted_;
};

inline std::optional<Witness> find_action_failure(const HomLieAction& a) {
  if (auto w = find_representation_failure(a.representation())) return w;
  const auto& g = a.acting();
  const auto& h = a.acted();
  const auto& hs = *h.space();
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t j = i + 1; j < h.dim(); ++j) {
        const Vec ex = Vec::unit(g.dim(), x), ei = Vec::unit(h.dim(), i), ej = Vec::unit(h.dim(), j);
        Vec lhs = a.act(g.space()->power_on_basis(1, x), h.bracket_basis(i, j));
        Vec rhs = h.bracket(a.act(ex, ei), hs.power_on_basis(1, j)) + h.bracket(hs.power_on_basis(1, i), a.act(ex, ej));
        if (!(lhs == rhs))
          return Witness{"derivation action", {x, i, j}, {g.space()->names()[x], hs.names()[i], hs.names()[j]}, lhs, rhs, hs.names()};
      }
  return std::nullopt;
}

inline bool check_action(const HomLieAction& a) { return !find_action_failure(a); }

/// Linear map between Hom-Lie algebras.
struct HomMorphism {
  HomLieAlgebra source;
  HomLieAlgebra target;
  Mat map;

  HomMorphism(HomLieAlgebra s, HomLieAlgebra t, Mat m) : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
    if (map.rows() != target.dim() || map.cols() != source.dim()) throw UsageError("morphism matrix has the wrong shape");
  }

  /// The map as an arity-1 cochain source -> target.
  SkewCochain as_cochain() const {
    SkewCochain c(source.space(), target.space(), 1);
    for (std::size_t i = 0; i < source.dim(); ++i) c.coeff(i) = map.column(i);
    return c;
  }
};

inline std::optional<Witness> find_morphism_failure(const HomMorphism& phi) {
  const auto& s = phi.source;
  const auto& t = phi.target;
  const auto& names = t.space()->names();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec lhs = t.twist() * phi.map.column(i);
    Vec rhs = phi.map * s.space()->power_on_basis(1, i);
    if (!(lhs == rhs)) return Witness{"twist intertwining", {i}, {s.space()->names()[i]}, lhs, rhs, names};
  }
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      Vec lhs = phi.map * s.bracket_basis(i, j);
      Vec rhs = t.bracket(phi.map.column(i), phi.map.column(j));
      if (!(lhs == rhs))
        return Witness{"bracket preservation", {i, j}, {s.space()->names()[i], s.space()->names()[j]}, lhs, rhs, names};
    }
  return std::nullopt;
}

inline bool check_morphism(const HomMorphism& phi) { return !find_morphism_failure(phi); }

/// Structure constants table: value of [e_i, e_j] for i<j, 0-based.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vec value;
};

inline SkewCochain bracket_from_entries(const SpaceRef& space, const std::vector<BracketEntry>& entries) {
  SkewCochain mu(space, space, 2);
  const auto& wb = mu.basis();
  for (const auto& e : entries) {
    if (e.i >= e.j || e.j >= space->dim()) throw UsageError("bracket entry needs i < j within the dimension");
    if (e.value.dim() != space->dim()) throw UsageError("bracket value has the wrong length");
    mu.coeff(static_cast<std::size_t>(wb.index_of_mask[(1u << e.i) | (1u << e.j)])) += e.value;
  }
  return mu;
}

inline Representation adjoint_representation(const HomLieAlgebra& g) {
  BilinearMap act(g.dim(), g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) act.on_basis(i, j) = g.bracket_basis(i, j);
  return Representation(g, g.space(), std::move(act));
}

inline HomLieAction adjoint_action(const HomLieAlgebra& g) { return HomLieAction(adjoint_representation(g), g); }

inline Representation trivial_representation(const HomLieAlgebra& g, SpaceRef module) {
  BilinearMap act(g.dim(), module->dim(), module->dim());
  return Representation(g, std::move(module), std::move(act));
}

/// Lie bracket (identity twist) composed with an endomorphism a that preserves it.
inline HomLieAlgebra yau_twist(const SkewCochain& lie_mu, const Mat& a, std::vector<std::string> names = {}) {
  if (lie_mu.arity() != 2) throw UsageError("yau_twist needs a bracket");
  const std::size_t n = lie_mu.domain()->dim();
  if (!(lie_mu.domain()->twist() == Mat::identity(n))) throw UsageError("yau_twist expects an untwisted Lie bracket");
  RawHomStructure lie(lie_mu.domain(), lie_mu);
  if (auto w = find_hom_jacobi_failure(lie)) throw StructureError("input is not a Lie algebra: " + w->describe());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(a * lie.bracket_basis(i, j) == lie.bracket(a.column(i), a.column(j))))
        throw UsageError("twist is not a homomorphism of the Lie bracket at (" + lie_mu.domain()->names()[i] + "," +
                         lie_mu.domain()->names()[j] + ")");
    }
  if (names.empty()) names = lie_mu.domain()->names();
  auto space = make_space(a, std::move(names));
  SkewCochain mu(space, space, 2);
  for (std::size_t k = 0; k < mu.size(); ++k) mu.coeff(k) = a * lie_mu.coeff(k);
  return HomLieAlgebra(space, std::move(mu));
}

/// [x,y] = xy - yx from a Hom-associative product (table[i][j] = e_i·e_j).
inline RawHomStructure commutator_hom_lie(const BilinearMap& product, const Mat& a, std::vector<std::string> names = {}) {
  const std::size_t n = a.rows();
  if (!a.is_square() || product.left_dim() != n || product.right_dim() != n || product.out_dim() != n)
    throw UsageError("product and twist dimensions disagree");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = product(a.column(i), product.on_basis(j, k));
        Vec rhs = product(product.on_basis(i, j), a.column(k));
        if (!(lhs == rhs)) throw UsageError("product is not Hom-associative");
      }
  auto space = make_space(a, std::move(names));
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) entries.push_back({i, j, product.on_basis(i, j) - product.on_basis(j, i)});
  RawHomStructure out(space, bracket_from_entries(space, entries));
  if (auto w = find_hom_jacobi_failure(out)) throw ConsistencyError("commutator bracket: " + w->describe());
  return out;
}

/// 𝔤 ⊕ 𝔥 with ([x,y], x⋄k - y⋄h + λ[h,k]) and twist α ⊕ β.
inline HomLieAlgebra semidirect_weight(const HomLieAction& action, const Scalar& lambda) {
  const auto& g = action.acting();
  const auto& h = action.acted();
  const std::size_t dg = g.dim(), dh = h.dim();
  std::vector<std::string> names;
  for (const auto& s : g.space()->names()) names.push_back(s);
  for (const auto& s : h.space()->names()) names.push_back(s + "'");
  auto space = make_space(direct_sum(g.twist(), h.twist()), std::move(names));
  auto embed_g = [&](const Vec& v) {
    Vec out(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) out[i] = v[i];
    return out;
  };
  auto embed_h = [&](const Vec& v) {
    Vec out(dg + dh);
    for (std::size_t i = 0; i < dh; ++i) out[dg + i] = v[i];
    return out;
  };
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < dg + dh; ++i)
    for (std::size_t j = i + 1; j < dg + dh; ++j) {
      Vec value(dg + dh);
      if (j < dg) {
        value = embed_g(g.bracket_basis(i, j));
      } else if (i < dg) {
        value = embed_h(action.representation().action().on_basis(i, j - dg));
      } else {
        value = embed_h(lambda * h.bracket_basis(i - dg, j - dg));
      }
      entries.push_back({i, j, std::move(value)});
    }
  return HomLieAlgebra(space, bracket_from_entries(space, entries));
}

}  // namespace homlie
