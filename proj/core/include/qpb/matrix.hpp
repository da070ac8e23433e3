#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qpb/errors.hpp"
#include "qpb/scalar.hpp"

namespace qpb {

/// Dense row-major matrix over an exact field (Rational or Scalar).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw ArityMismatch("ragged matrix initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  F& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<F> row(size_t i) const {
    return std::vector<F>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArityMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArityMismatch("matrix sum shape mismatch");
    for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArityMismatch("matrix difference shape mismatch");
    for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }

  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.a_) x = s * x;
    return a;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  F trace() const {
    F t(0);
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      F inv = inverse((*this)(r, c));
      for (size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (size_t j = c; j < cols_; ++j) {
          if (is_zero((*this)(r, j))) continue;
          (*this)(i, j) -= f * (*this)(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<F>> kernel() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, F(0));
      v[free] = F(1);
      for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Matrix inverse_matrix() const {
    if (rows_ != cols_) throw ArityMismatch("inverse of non-square matrix");
    const size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = F(1);
    }
    auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  F determinant() const {
    if (rows_ != cols_) throw ArityMismatch("determinant of non-square matrix");
    Matrix m = *this;
    F det(1);
    const size_t n = rows_;
    for (size_t c = 0; c < n; ++c) {
      size_t p = c;
      while (p < n && is_zero(m(p, c))) ++p;
      if (p == n) return F(0);
      if (p != c) {
        for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      F inv = inverse(m(c, c));
      for (size_t i = c + 1; i < n; ++i) {
        if (is_zero(m(i, c))) continue;
        F f = m(i, c) * inv;
        for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<F> a_;
};

using RationalMatrix = Matrix<Rational>;
using ExactMatrix = Matrix<Scalar>;

struct RankProfile {
  size_t generic = 0;
  size_t zero = 0;
};

enum class Point { generic, zero };

/// Entrywise h = 0 specialization; throws PoleAtZero.
RationalMatrix specialize_at_zero(const ExactMatrix& m);
ExactMatrix to_exact(const RationalMatrix& m);

/// Rank over Q(h) and rank of the h = 0 specialization.
RankProfile rank_profile(const ExactMatrix& m);

/// X with A X = B over Q(h) for square A, by fraction-free Gauss-Jordan
/// over Q[h]. Throws SingularMatrix.
ExactMatrix solve(const ExactMatrix& A, const ExactMatrix& B);

/// Kernel basis at the requested point; `zero` vectors are returned as
/// constant scalars.
std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m, Point at);

}  // namespace qpb
