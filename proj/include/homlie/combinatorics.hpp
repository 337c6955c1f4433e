#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// +1 or -1, by inversion count.
inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

/// A (n_1,...,n_k)-shuffle. perm[p] is the (0-based) argument placed in slot p;
/// perm is increasing inside each block.
struct SignedShuffle {
  std::vector<std::size_t> perm;
  int sign = 1;
};

namespace detail {

inline std::vector<SignedShuffle> enumerate_shuffles(const std::vector<std::size_t>& blocks) {
  // labels[i] = block receiving argument i; walking all distinct label words
  // in lexicographic order hits every shuffle once.
  std::vector<std::size_t> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b) labels.insert(labels.end(), blocks[b], b);
  std::vector<SignedShuffle> out;
  do {
    SignedShuffle s;
    s.perm.reserve(labels.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == b) s.perm.push_back(i);
    s.sign = permutation_sign(s.perm);
    out.push_back(std::move(s));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace detail

/// All shuffles for the given block sizes, each once, with signature.
/// Results are cached; the returned reference stays valid for the process lifetime.
inline const std::vector<SignedShuffle>& shuffles(const std::vector<std::size_t>& blocks) {
  static std::mutex mutex;
  static std::map<std::vector<std::size_t>, std::unique_ptr<std::vector<SignedShuffle>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[blocks];
  if (!slot) slot = std::make_unique<std::vector<SignedShuffle>>(detail::enumerate_shuffles(blocks));
  return *slot;
}

/// Increasing index tuples of length `arity` from {0..dim-1}, in lexicographic
/// order, plus the inverse lookup bitmask -> position.
struct WedgeBasis {
  std::size_t dim = 0;
  std::size_t arity = 0;
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::int32_t> index_of_mask;  // -1 when popcount != arity

  std::size_t size() const { return tuples.size(); }
};

inline constexpr std::size_t kMaxDim = 16;

inline const WedgeBasis& wedge_basis(std::size_t dim, std::size_t arity) {
  if (dim > kMaxDim) throw UsageError("dimension above " + std::to_string(kMaxDim) + " is not supported");
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<WedgeBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dim, arity}];
  if (!slot) {
    auto wb = std::make_unique<WedgeBasis>();
    wb->dim = dim;
    wb->arity = arity;
    wb->index_of_mask.assign(std::size_t{1} << dim, -1);
    if (arity <= dim) {
      std::vector<bool> pick(dim, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(arity), true);
      // prev_permutation over a leading-true mask yields lexicographic tuples
      do {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < dim; ++i)
          if (pick[i]) t.push_back(i);
        wb->tuples.push_back(std::move(t));
      } while (std::prev_permutation(pick.begin(), pick.end()));
      for (std::size_t k = 0; k < wb->tuples.size(); ++k) {
        std::uint32_t mask = 0;
        for (auto i : wb->tuples[k]) mask |= 1u << i;
        wb->index_of_mask[mask] = static_cast<std::int32_t>(k);
      }
    }
    slot = std::move(wb);
  }
  return *slot;
}

inline std::uint32_t tuple_mask(const std::vector<std::size_t>& t) {
  std::uint32_t m = 0;
  for (auto i : t) m |= 1u << i;
  return m;
}

}  // namespace homlie
