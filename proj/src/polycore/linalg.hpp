#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polycore/field.hpp"

namespace logvec {

template <class K>
using Vector = std::vector<K>;

/// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field<K> field = {})
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

  static Matrix identity(std::size_t n, Field<K> field = {}) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field<K>& field() const { return field_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      K inv = field_.one() / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        K f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of the right kernel {v : M v = 0}.
  std::vector<Vector<K>> kernel() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector<K>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vector<K> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  K determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = *this;
    K det = field_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && is_zero(m(p, c))) ++p;
      if (p == rows_) return field_.zero();
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      K inv = field_.one() / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (is_zero(m(i, c))) continue;
        K f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::size_t n = rows_;
    Matrix aug(n, 2 * n, field_);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = field_.one();
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n, field_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  Field<K> field_{};
  std::vector<K> data_;
};

/// Incrementally maintained echelon basis of a subspace of K^n. Rows are
/// kept with a unit pivot and eliminated against each other on insertion.
template <class K>
class EchelonSpan {
public:
  EchelonSpan(std::size_t dim, Field<K> field = {}) : dim_(dim), field_(field) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return dim_; }

  /// Reduces v against the basis in place; returns the index of the first
  /// nonzero entry of the residue, or ambient() if v is in the span.
  std::size_t reduce(Vector<K>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (is_zero(c)) continue;
      K f = c;
      const auto& row = rows_[i];
      for (std::size_t j = pivots_[i]; j < dim_; ++j)
        if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    for (std::size_t j = 0; j < dim_; ++j)
      if (!is_zero(v[j])) return j;
    return dim_;
  }

  bool contains(Vector<K> v) const { return reduce(v) == dim_; }

  /// Adds v; returns false if it was already in the span.
  bool insert(Vector<K> v) {
    std::size_t p = reduce(v);
    if (p == dim_) return false;
    K inv = field_.one() / v[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      K c = rows_[i][p];
      if (is_zero(c)) continue;
      for (std::size_t j = p; j < dim_; ++j)
        if (!is_zero(v[j])) rows_[i][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<Vector<K>>& basis() const { return rows_; }

private:
  std::size_t dim_;
  Field<K> field_;
  std::vector<Vector<K>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace logvec
