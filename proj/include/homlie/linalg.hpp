#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

/// Dense vector of exact rationals with a fixed dimension.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : entries_(dim) {}
  Vec(std::initializer_list<Scalar> entries) : entries_(entries) {}
  explicit Vec(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

  static Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v.entries_.at(i) = 1;
    return v;
  }

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return sgn(s) == 0; });
  }

  Vec& operator+=(const Vec& other) {
    require_same_dim(other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }
  Vec& operator-=(const Vec& other) {
    require_same_dim(other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }
  Vec& operator*=(const Scalar& factor) {
    for (auto& e : entries_) e *= factor;
    return *this;
  }
  /// this += factor * other
  void add_scaled(const Scalar& factor, const Vec& other) {
    require_same_dim(other);
    if (sgn(factor) == 0) return;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (sgn(other.entries_[i]) != 0) entries_[i] += factor * other.entries_[i];
    }
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Scalar(-1); }
  friend Vec operator*(const Scalar& s, Vec a) { return a *= s; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.entries_ == b.entries_; }

 private:
  void require_same_dim(const Vec& other) const {
    if (other.dim() != dim()) throw UsageError("vector dimension mismatch");
  }

  std::vector<Scalar> entries_;
};

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat diagonal(std::span<const Scalar> entries) {
    Mat m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }
  static Mat diagonal(std::initializer_list<Scalar> entries) {
    return diagonal(std::span<const Scalar>(entries.begin(), entries.size()));
  }
  static Mat from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw UsageError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// Matrix whose j-th column is columns[j].
  static Mat from_columns(std::span<const Vec> columns, std::size_t rows) {
    Mat m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].dim() != rows) throw UsageError("column dimension mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix product dimension mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols_ != v.dim()) throw UsageError("matrix-vector dimension mismatch");
    Vec out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (sgn(v[j]) != 0 && sgn(a(i, j)) != 0) out[i] += a(i, j) * v[j];
      }
    return out;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Mat operator*(const Scalar& s, Mat a) {
    for (auto& e : a.data_) e *= s;
    return a;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw UsageError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Block-diagonal sum a ⊕ b.
inline Mat direct_sum(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

namespace detail {

/// In-place reduced row echelon form; first nonzero entry in a column is the
/// pivot. Returns the pivot column of each nonzero row.
inline std::vector<std::size_t> row_reduce(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Scalar inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (sgn(m(row, j)) != 0) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Rank over the rationals.
inline std::size_t mat_rank(const Mat& m) {
  Mat work = m;
  return detail::row_reduce(work).size();
}

/// Basis of {v : m v = 0}; one vector per free column, with that column set to 1.
inline std::vector<Vec> kernel_basis(const Mat& m) {
  Mat work = m;
  const auto pivots = detail::row_reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
  if (b.dim() != m.rows()) throw UsageError("solve_linear: right-hand side has the wrong dimension");
  Mat augmented(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) augmented(i, j) = m(i, j);
    augmented(i, m.cols()) = b[i];
  }
  const auto pivots = detail::row_reduce(augmented);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = augmented(r, m.cols());
  return x;
}

}  // namespace homlie
