#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "homlie/combinatorics.hpp"
#include "homlie/linalg.hpp"
#include "homlie/scalar.hpp"

namespace homlie {

/// Matrix of Λ^n a on the lexicographic wedge basis: entry (t, s) is the
/// coefficient of e_t in a e_{s_1} ∧ ... ∧ a e_{s_n}.
inline Mat wedge_power(const Mat& a, std::size_t n) {
  if (!a.is_square()) throw UsageError("wedge_power needs a square matrix");
  const auto& wb = wedge_basis(a.rows(), n);
  Mat out(wb.size(), wb.size());
  for (std::size_t s = 0; s < wb.size(); ++s) {
    // walk the product expansion directly
    struct Walker {
      const Mat& a;
      const WedgeBasis& wb;
      const std::vector<std::size_t>& tuple;
      Mat& out;
      std::size_t s;
      void go(std::size_t pos, std::uint32_t mask, const Scalar& c) {
        if (pos == tuple.size()) {
          out(static_cast<std::size_t>(wb.index_of_mask[mask]), s) += c;
          return;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
          const Scalar& x = a(i, tuple[pos]);
          if (sgn(x) == 0) continue;
          const std::uint32_t bit = 1u << i;
          if (mask & bit) continue;
          Scalar next = c * x;
          if (std::popcount(mask >> i) % 2 == 1) next = -next;
          go(pos + 1, mask | bit, next);
        }
      }
    } walker{a, wb, wb.tuples[s], out, s};
    walker.go(0, 0, Scalar(1));
  }
  return out;
}

/// Finite-dimensional space with a twist endomorphism. Powers of the twist are
/// computed lazily and kept.
class TwistedSpace {
 public:
  explicit TwistedSpace(Mat twist, std::vector<std::string> names = {}) : twist_(std::move(twist)), names_(std::move(names)) {
    if (!twist_.is_square()) throw UsageError("twist must be a square matrix");
    if (twist_.rows() > kMaxDim) throw UsageError("dimension above " + std::to_string(kMaxDim) + " is not supported");
    if (names_.empty()) {
      for (std::size_t i = 0; i < dim(); ++i) names_.push_back("e" + std::to_string(i + 1));
    }
    if (names_.size() != dim()) throw UsageError("basis name count does not match dimension");
    powers_.push_back(Mat::identity(dim()));
  }

  std::size_t dim() const { return twist_.rows(); }
  const Mat& twist() const { return twist_; }
  const std::vector<std::string>& names() const { return names_; }

  /// twist^k; references stay valid (deque never relocates elements).
  const Mat& power(std::size_t k) const {
    std::lock_guard lock(mutex_);
    while (powers_.size() <= k) powers_.push_back(twist_ * powers_.back());
    return powers_[k];
  }

  /// Column k of twist^p, i.e. twist^p applied to basis vector e_i.
  Vec power_on_basis(std::size_t p, std::size_t i) const { return power(p).column(i); }

  /// Λⁿ(twist), cached per arity.
  const Mat& wedge_twist(std::size_t n) const {
    std::lock_guard lock(mutex_);
    while (wedges_.size() <= n) wedges_.push_back(nullptr);
    if (!wedges_[n]) wedges_[n] = std::make_unique<Mat>(wedge_power(twist_, n));
    return *wedges_[n];
  }

  /// Same dimension and twist; names do not matter.
  bool same_as(const TwistedSpace& other) const { return this == &other || twist_ == other.twist_; }

 private:
  Mat twist_;
  std::vector<std::string> names_;
  mutable std::mutex mutex_;
  mutable std::deque<Mat> powers_;
  mutable std::vector<std::unique_ptr<Mat>> wedges_;
};

using SpaceRef = std::shared_ptr<const TwistedSpace>;

inline SpaceRef make_space(Mat twist, std::vector<std::string> names = {}) {
  return std::make_shared<const TwistedSpace>(std::move(twist), std::move(names));
}

inline void require_same_space(const SpaceRef& a, const SpaceRef& b, const char* what) {
  if (!a->same_as(*b)) throw UsageError(std::string(what) + ": spaces do not match");
}

/// Alternating multilinear map Λ^arity(domain) -> codomain, stored densely on
/// increasing basis tuples. Arity 0 is a single vector (a degree-0 cochain).
class SkewCochain {
 public:
  SkewCochain(SpaceRef domain, SpaceRef codomain, std::size_t arity)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), arity_(arity) {
    table_.assign(basis().size(), Vec(codomain_->dim()));
  }

  /// Fills the table by calling fn(tuple) on each increasing tuple.
  template <class Fn>
  static SkewCochain tabulate(SpaceRef domain, SpaceRef codomain, std::size_t arity, Fn&& fn) {
    SkewCochain out(std::move(domain), std::move(codomain), arity);
    const auto& wb = out.basis();
    for (std::size_t k = 0; k < wb.size(); ++k) {
      Vec v = fn(wb.tuples[k]);
      if (v.dim() != out.codomain_->dim()) throw ConsistencyError("tabulated value has the wrong dimension");
      out.table_[k] = std::move(v);
    }
    return out;
  }

  const SpaceRef& domain() const { return domain_; }
  const SpaceRef& codomain() const { return codomain_; }
  std::size_t arity() const { return arity_; }
  const WedgeBasis& basis() const { return wedge_basis(domain_->dim(), arity_); }
  std::size_t size() const { return table_.size(); }

  const Vec& coeff(std::size_t k) const { return table_[k]; }
  Vec& coeff(std::size_t k) { return table_[k]; }

  /// Value on basis vectors e_{idx[0]},...; any order, repeats give zero.
  Vec on_basis(const std::vector<std::size_t>& idx) const {
    if (idx.size() != arity_) throw UsageError("wrong number of arguments for cochain");
    std::uint32_t mask = 0;
    int sign = 1;
    for (auto i : idx) {
      if (i >= domain_->dim()) throw UsageError("basis index out of range");
      const std::uint32_t bit = 1u << i;
      if (mask & bit) return Vec(codomain_->dim());
      if (std::popcount(mask >> i) % 2 == 1) sign = -sign;
      mask |= bit;
    }
    Vec v = table_[static_cast<std::size_t>(basis().index_of_mask[mask])];
    if (sign < 0) v *= Scalar(-1);
    return v;
  }

  /// Multilinear evaluation on arbitrary vectors.
  Vec operator()(const std::vector<Vec>& args) const {
    if (args.size() != arity_) throw UsageError("wrong number of arguments for cochain");
    for (const auto& a : args)
      if (a.dim() != domain_->dim()) throw UsageError("argument dimension does not match cochain domain");
    Vec out(codomain_->dim());
    expand(args, 0, 0, Scalar(1), out);
    return out;
  }

  bool is_zero() const {
    for (const auto& v : table_)
      if (!v.is_zero()) return false;
    return true;
  }

  /// Coordinates: tuple-major, codomain index minor.
  Vec flatten() const {
    const std::size_t c = codomain_->dim();
    Vec flat(table_.size() * c);
    for (std::size_t k = 0; k < table_.size(); ++k)
      for (std::size_t j = 0; j < c; ++j) flat[k * c + j] = table_[k][j];
    return flat;
  }
  static SkewCochain from_flat(SpaceRef domain, SpaceRef codomain, std::size_t arity, const Vec& flat) {
    SkewCochain out(std::move(domain), std::move(codomain), arity);
    const std::size_t c = out.codomain_->dim();
    if (flat.dim() != out.table_.size() * c) throw UsageError("flat coordinate vector has the wrong length");
    for (std::size_t k = 0; k < out.table_.size(); ++k)
      for (std::size_t j = 0; j < c; ++j) out.table_[k][j] = flat[k * c + j];
    return out;
  }

  /// Apply a codomain-side linear map to every value.
  SkewCochain post_compose(const Mat& m, SpaceRef new_codomain) const {
    if (m.cols() != codomain_->dim() || m.rows() != new_codomain->dim()) throw UsageError("post_compose: shape mismatch");
    SkewCochain out(domain_, std::move(new_codomain), arity_);
    for (std::size_t k = 0; k < table_.size(); ++k) out.table_[k] = m * table_[k];
    return out;
  }

  SkewCochain& operator+=(const SkewCochain& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < table_.size(); ++k) table_[k] += o.table_[k];
    return *this;
  }
  SkewCochain& operator-=(const SkewCochain& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < table_.size(); ++k) table_[k] -= o.table_[k];
    return *this;
  }
  SkewCochain& operator*=(const Scalar& s) {
    for (auto& v : table_) v *= s;
    return *this;
  }
  friend SkewCochain operator+(SkewCochain a, const SkewCochain& b) { return a += b; }
  friend SkewCochain operator-(SkewCochain a, const SkewCochain& b) { return a -= b; }
  friend SkewCochain operator-(SkewCochain a) { return a *= Scalar(-1); }
  friend SkewCochain operator*(const Scalar& s, SkewCochain a) { return a *= s; }
  friend SkewCochain operator*(int s, SkewCochain a) { return a *= Scalar(s); }

  friend bool operator==(const SkewCochain& a, const SkewCochain& b) {
    return a.arity_ == b.arity_ && a.domain_->same_as(*b.domain_) && a.codomain_->same_as(*b.codomain_) &&
           a.table_ == b.table_;
  }

  bool same_shape(const SkewCochain& o) const {
    return arity_ == o.arity_ && domain_->same_as(*o.domain_) && codomain_->same_as(*o.codomain_);
  }

 private:
  void require_same_shape(const SkewCochain& o) const {
    if (!same_shape(o)) throw UsageError("cochains have different arity or spaces");
  }

  void expand(const std::vector<Vec>& args, std::size_t pos, std::uint32_t mask, const Scalar& coeff, Vec& out) const {
    if (pos == args.size()) {
      out.add_scaled(coeff, table_[static_cast<std::size_t>(basis().index_of_mask[mask])]);
      return;
    }
    const Vec& a = args[pos];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (sgn(a[i]) == 0) continue;
      const std::uint32_t bit = 1u << i;
      if (mask & bit) continue;
      Scalar c = coeff * a[i];
      if (std::popcount(mask >> i) % 2 == 1) c = -c;
      expand(args, pos + 1, mask | bit, c, out);
    }
  }

  SpaceRef domain_;
  SpaceRef codomain_;
  std::size_t arity_;
  std::vector<Vec> table_;
};

/// Degree-0 cochain: a vector fixed by the codomain twist.
inline SkewCochain degree0_cochain(SpaceRef domain, SpaceRef codomain, const Vec& value) {
  SkewCochain c(std::move(domain), std::move(codomain), 0);
  c.coeff(0) = value;
  return c;
}

/// Matrix (on flat coordinates) of f ↦ β∘f − f∘Λⁿα.
inline Mat compatibility_operator(const SpaceRef& domain, const SpaceRef& codomain, std::size_t arity) {
  const Mat& lam = domain->wedge_twist(arity);
  const Mat& beta = codomain->twist();
  const std::size_t n = lam.rows();
  const std::size_t c = codomain->dim();
  Mat op(n * c, n * c);
  // (β f)(s)_j = Σ_k β(j,k) f(s)_k ;  (f∘Λα)(s)_j = Σ_t lam(t,s) f(t)_j
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < c; ++j) {
      for (std::size_t k = 0; k < c; ++k) op(s * c + j, s * c + k) += beta(j, k);
      for (std::size_t t = 0; t < n; ++t) op(s * c + j, t * c + j) -= lam(t, s);
    }
  return op;
}

/// β∘f − f∘Λⁿα as a cochain; zero iff f is compatible.
inline SkewCochain compatibility_defect(const SkewCochain& f) {
  const Mat& lam = f.domain()->wedge_twist(f.arity());
  const Mat& beta = f.codomain()->twist();
  SkewCochain out(f.domain(), f.codomain(), f.arity());
  for (std::size_t s = 0; s < f.size(); ++s) {
    Vec v = beta * f.coeff(s);
    for (std::size_t t = 0; t < f.size(); ++t)
      if (sgn(lam(t, s)) != 0) v.add_scaled(-lam(t, s), f.coeff(t));
    out.coeff(s) = std::move(v);
  }
  return out;
}

inline bool is_compatible(const SkewCochain& f) { return compatibility_defect(f).is_zero(); }

inline void require_compatible(const SkewCochain& f, const char* what) {
  if (!is_compatible(f)) throw UsageError(std::string(what) + ": cochain does not commute with the twists");
}

/// Basis of the space of compatible cochains of the given arity.
inline std::vector<SkewCochain> compatibility_basis(const SpaceRef& domain, const SpaceRef& codomain, std::size_t arity) {
  std::vector<SkewCochain> out;
  for (const auto& v : kernel_basis(compatibility_operator(domain, codomain, arity)))
    out.push_back(SkewCochain::from_flat(domain, codomain, arity, v));
  return out;
}

/// i_P Q: P is an endo-cochain on A (arity m), Q maps A to anything (arity n).
/// (i_P Q)(x..) = Σ_{Sh(m,n-1)} sgn Q(P(x_σ1..x_σm), α^{m-1}x_σ(m+1), ...)
inline SkewCochain contract(const SkewCochain& P, const SkewCochain& Q) {
  require_same_space(P.domain(), P.codomain(), "contraction");
  require_same_space(P.domain(), Q.domain(), "contraction");
  const std::size_t m = P.arity(), n = Q.arity();
  if (m == 0 || n == 0) throw UsageError("contraction is defined for arity >= 1 only");
  const auto& A = *P.domain();
  const auto& sh = shuffles({m, n - 1});
  return SkewCochain::tabulate(P.domain(), Q.codomain(), m + n - 1, [&](const std::vector<std::size_t>& x) {
    Vec out(Q.codomain()->dim());
    std::vector<std::size_t> inner(m);
    std::vector<Vec> args(n);
    for (const auto& s : sh) {
      for (std::size_t i = 0; i < m; ++i) inner[i] = x[s.perm[i]];
      args[0] = P.on_basis(inner);
      if (args[0].is_zero()) continue;
      for (std::size_t i = 1; i < n; ++i) args[i] = A.power_on_basis(m - 1, x[s.perm[m - 1 + i]]);
      out.add_scaled(Scalar(s.sign), Q(args));
    }
    return out;
  });
}

/// ĩ_f P for f on 𝔥 and P: 𝔥 → 𝔤. Same formula as contract, twist taken from 𝔥.
inline SkewCochain contract_mixed(const SkewCochain& f, const SkewCochain& P) { return contract(f, P); }

}  // namespace homlie
