#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpb/scalar.hpp"

namespace qpb {

/// Sparse vector: (column, value) pairs sorted by column, no zero values.
template <class F>
using SparseRow = std::vector<std::pair<uint32_t, F>>;

/// a + s * b for sparse rows.
template <class F>
SparseRow<F> axpy(const SparseRow<F>& a, const F& s, const SparseRow<F>& b) {
  SparseRow<F> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      F v = a[i].second + s * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Row echelon basis keyed by leading (largest) column. Rows are kept with
/// leading coefficient 1 and are only reduced at their leading entry, which
/// is enough for rank, membership, and Zassenhaus intersections.
template <class F>
class EchelonBasis {
 public:
  /// Reduce `row` until its leading column has no pivot; zero if in span.
  SparseRow<F> reduce(SparseRow<F> row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.back().first);
      if (it == pivots_.end()) break;
      F c = -row.back().second;
      row = axpy(row, c, it->second);
    }
    return row;
  }

  /// Returns true if the row increased the rank.
  bool insert(SparseRow<F> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    F inv = inverse(row.back().second);
    for (auto& e : row) e.second = e.second * inv;
    uint32_t lead = row.back().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  bool contains(const SparseRow<F>& row) const { return reduce(row).empty(); }
  size_t rank() const { return pivots_.size(); }

  std::vector<SparseRow<F>> rows() const {
    std::vector<std::pair<uint32_t, SparseRow<F>>> sorted(pivots_.begin(), pivots_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<SparseRow<F>> out;
    out.reserve(sorted.size());
    for (auto& [lead, r] : sorted) out.push_back(std::move(r));
    return out;
  }

 private:
  std::unordered_map<uint32_t, SparseRow<F>> pivots_;
};

template <class F>
size_t sparse_rank(const std::vector<SparseRow<F>>& rows) {
  EchelonBasis<F> b;
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

template <class F>
SparseRow<F> to_sparse(const std::vector<F>& dense) {
  SparseRow<F> r;
  for (size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) r.emplace_back(static_cast<uint32_t>(i), dense[i]);
  return r;
}

template <class F>
std::vector<F> to_dense(const SparseRow<F>& row, size_t n) {
  std::vector<F> d(n, F(0));
  for (const auto& [c, v] : row) d[c] = v;
  return d;
}

/// Finite-dimensional subspace of F^n, held as an echelon basis.
template <class F>
class Subspace {
 public:
  explicit Subspace(size_t ambient = 0) : n_(ambient) {}
  Subspace(size_t ambient, const std::vector<SparseRow<F>>& spanning) : n_(ambient) {
    for (const auto& r : spanning) basis_.insert(r);
  }

  static Subspace whole(size_t n) {
    Subspace s(n);
    for (uint32_t i = 0; i < n; ++i) s.basis_.insert({{i, F(1)}});
    return s;
  }

  size_t ambient() const { return n_; }
  size_t dim() const { return basis_.rank(); }
  std::vector<SparseRow<F>> basis() const { return basis_.rows(); }
  bool contains(const SparseRow<F>& v) const { return basis_.contains(v); }

  bool contains(const Subspace& o) const {
    for (const auto& r : o.basis())
      if (!contains(r)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.dim() == b.dim() && a.contains(b);
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& r : b.basis()) s.basis_.insert(r);
    return s;
  }

  /// Zassenhaus: echelonize rows [a | a] and [b | 0] with the left copy in
  /// the high columns; rows whose leading entry lands in the right copy
  /// span the intersection.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    const auto n = static_cast<uint32_t>(a.n_);
    EchelonBasis<F> z;
    for (const auto& r : a.basis()) {
      SparseRow<F> d = r;
      for (const auto& [c, v] : r) d.emplace_back(c + n, v);
      z.insert(std::move(d));
    }
    for (const auto& r : b.basis()) {
      SparseRow<F> d;
      for (const auto& [c, v] : r) d.emplace_back(c + n, v);
      z.insert(std::move(d));
    }
    Subspace out(a.n_);
    for (const auto& r : z.rows()) {
      if (r.back().first >= n) continue;
      out.basis_.insert(r);
    }
    return out;
  }

 private:
  size_t n_;
  EchelonBasis<F> basis_;
};

}  // namespace qpb
