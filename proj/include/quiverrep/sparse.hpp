#pragma once

// Incremental sparse row echelon form. Hom spaces and coboundary spaces are
// cut out by very sparse linear systems (each intertwining equation touches
// only the rows/columns of two vertex blocks), so we eliminate on sorted
// sparse rows instead of dense matrices.

#include <quiverrep/matrix.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quiverrep {

template <Field F>
using SparseRow = std::vector<std::pair<std::size_t, F>>;

/// a + factor * b on sorted sparse rows, dropping cancelled entries.
template <Field F>
SparseRow<F> axpy(const SparseRow<F>& a, const F& factor, const SparseRow<F>& b) {
  SparseRow<F> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, F(factor * ib->second));
      ++ib;
    } else {
      F v = ia->second + factor * ib->second;
      if (!is_zero(v)) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

/// Row space of a growing set of sparse vectors in F^width, kept in echelon
/// form keyed by leading column. finalize() turns it into reduced echelon
/// form, after which reduce() yields canonical coset representatives and
/// kernel() a basis of the orthogonal solution space.
template <Field F>
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row (sorted by column, no zero entries). Returns true when the
  /// row increased the rank.
  bool add(SparseRow<F> row) {
    reduced_ = false;
    while (!row.empty()) {
      auto it = rows_.find(row.front().first);
      if (it == rows_.end()) {
        const F inv = from_int<F>(1) / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        const std::size_t lead = row.front().first;
        rows_.emplace(lead, std::move(row));
        return true;
      }
      const F factor = -row.front().second;
      row = axpy(row, factor, it->second);
    }
    return false;
  }

  /// Back-substitution: afterwards every pivot column is zero in all other rows.
  void finalize() {
    if (reduced_) return;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseRow<F>& row = it->second;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t k = 1; k < row.size(); ++k) {
          auto pivot = rows_.find(row[k].first);
          if (pivot == rows_.end()) continue;
          const F factor = -row[k].second;
          row = axpy(row, factor, pivot->second);
          changed = true;
          break;
        }
      }
    }
    reduced_ = true;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& [c, r] : rows_) p.push_back(c);
    return p;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> f;
    for (std::size_t j = 0; j < width_; ++j) {
      if (!rows_.count(j)) f.push_back(j);
    }
    return f;
  }

  /// Columns: basis of {x : r . x = 0 for every stored row r}. Vector k has a
  /// 1 at the k-th free column and 0 at the other free columns.
  Matrix<F> kernel() {
    finalize();
    auto free = free_columns();
    std::vector<std::size_t> free_index(width_, width_);
    for (std::size_t k = 0; k < free.size(); ++k) free_index[free[k]] = k;
    Matrix<F> basis(width_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) basis(free[k], k) = from_int<F>(1);
    for (const auto& [pivot, row] : rows_) {
      for (std::size_t e = 1; e < row.size(); ++e) {
        basis(pivot, free_index[row[e].first]) = -row[e].second;
      }
    }
    return basis;
  }

  /// Canonical representative of v modulo the row space: the unique element
  /// of v + rowspace that vanishes at every pivot column.
  /// Requires finalize().
  std::vector<F> reduce(std::vector<F> v) const {
    if (!reduced_) throw std::logic_error("SparseEchelon::reduce before finalize");
    if (v.size() != width_) throw DimensionError("SparseEchelon::reduce: wrong vector length");
    for (const auto& [pivot, row] : rows_) {
      if (is_zero(v[pivot])) continue;
      const F factor = v[pivot];
      for (const auto& [c, x] : row) v[c] -= factor * x;
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const F& x) { return is_zero(x); });
  }

 private:
  std::size_t width_;
  std::map<std::size_t, SparseRow<F>> rows_;
  bool reduced_ = true;
};

template <Field F>
SparseRow<F> to_sparse(const std::vector<F>& v) {
  SparseRow<F> r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) r.emplace_back(i, v[i]);
  }
  return r;
}

}  // namespace quiverrep
