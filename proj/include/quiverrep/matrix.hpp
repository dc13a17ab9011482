#pragma once

// Dense exact matrices and the elimination routines everything else is
// built on: rref, kernels, particular solutions and basis completion.

#include <quiverrep/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quiverrep {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("Matrix: entry count " + std::to_string(data_.size()) +
                           " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int<F>(1);
    return m;
  }

  /// Builds a matrix from integer rows; convenient in tests and generators.
  static Matrix from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long long> v) {
    if (v.size() != rows * cols) throw DimensionError("Matrix::from_ints: wrong entry count");
    std::vector<F> data;
    data.reserve(v.size());
    for (long long x : v) data.push_back(from_int<F>(x));
    return Matrix(rows, cols, std::move(data));
  }

  /// Column vector from entries.
  static Matrix column(std::vector<F> entries) {
    const std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Row-major entries.
  const std::vector<F>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return quiverrep::is_zero(x); });
  }

  Matrix col(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Matrix::block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
      throw DimensionError("Matrix::set_block out of range");
    }
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
    return s;
  }

  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("Matrix product: " + a.shape() + " * " + b.shape());
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (quiverrep::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!quiverrep::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b, "+");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b, "-");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        os << (j ? " " : "") << scalar_traits<F>::to_string(m(i, j));
      }
    }
    return os << ']';
  }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw DimensionError(std::string("Matrix ") + op + ": " + shape() + " vs " + b.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// [a | b]
template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row mismatch");
  Matrix<F> r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

/// [a ; b]
template <Field F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column mismatch");
  Matrix<F> r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

/// diag(a, b)
template <Field F>
Matrix<F> block_diag(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

template <Field F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. The first nonzero
/// entry of each remaining row is the pivot; no magnitude pivoting is needed
/// in exact arithmetic.
template <Field F>
RrefResult<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const F inv = from_int<F>(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Columns form a basis of {x : m x = 0}. Basis vector k has a 1 at the k-th
/// free column and 0 at every other free column.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Matrix<F> basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = from_int<F>(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free[k]);
  }
  return basis;
}

/// One particular solution of m x = b (free variables set to zero), or
/// nullopt when the system is inconsistent. b may have several columns.
template <Field F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& b) {
  if (b.rows() != m.rows()) {
    throw DimensionError("solve: matrix " + m.shape() + " with right-hand side " + b.shape());
  }
  auto [r, pivots] = rref(hstack(m, b));
  Matrix<F> x(m.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t k = 0; k < b.cols(); ++k) x(pivots[i], k) = r(i, m.cols() + k);
  }
  return x;
}

/// Columns extending the (independent) columns of `sub` to a basis of
/// F^ambient: the first standard basis vectors outside the running span, in
/// index order.
template <Field F>
Matrix<F> complement_basis(const Matrix<F>& sub, std::size_t ambient) {
  if (sub.rows() != ambient && !(sub.cols() == 0)) {
    throw DimensionError("complement_basis: vectors of length " + std::to_string(sub.rows()) +
                         " in ambient dimension " + std::to_string(ambient));
  }
  Matrix<F> current = sub.cols() == 0 ? Matrix<F>(ambient, 0) : sub;
  if (rank(current) != current.cols()) {
    throw DimensionError("complement_basis: input columns are dependent");
  }
  std::vector<std::size_t> chosen;
  std::size_t r = current.cols();
  for (std::size_t j = 0; j < ambient && r < ambient; ++j) {
    Matrix<F> e(ambient, 1);
    e(j, 0) = from_int<F>(1);
    Matrix<F> trial = hstack(current, e);
    if (rank(trial) > r) {
      current = std::move(trial);
      chosen.push_back(j);
      ++r;
    }
  }
  Matrix<F> out(ambient, chosen.size());
  for (std::size_t k = 0; k < chosen.size(); ++k) out(chosen[k], k) = from_int<F>(1);
  return out;
}

/// Basis of the column space, taken from the pivot columns of m.
template <Field F>
Matrix<F> column_space_basis(const Matrix<F>& m) {
  return m.select_cols(rref(m).pivots);
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto [r, pivots] = rref(hstack(m, Matrix<F>::identity(m.rows())));
  if (pivots.size() < m.rows() || (m.rows() > 0 && pivots[m.rows() - 1] >= m.cols())) {
    return std::nullopt;
  }
  return r.block(0, m.cols(), m.rows(), m.rows());
}

template <Field F>
bool is_invertible(const Matrix<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// For injective m (full column rank): r with r m = 1. Built from the first
/// independent rows of m.
template <Field F>
Matrix<F> retraction(const Matrix<F>& m) {
  auto rows = rref(m.transpose()).pivots;
  if (rows.size() != m.cols()) throw DimensionError("retraction: matrix is not injective");
  auto inv = inverse(m.select_rows(rows));
  Matrix<F> r(m.cols(), m.rows());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t i = 0; i < m.cols(); ++i) r(i, rows[k]) = (*inv)(i, k);
  return r;
}

/// For surjective m (full row rank): s with m s = 1. Built from the pivot
/// columns of m.
template <Field F>
Matrix<F> section(const Matrix<F>& m) {
  auto cols = rref(m).pivots;
  if (cols.size() != m.rows()) throw DimensionError("section: matrix is not surjective");
  auto inv = inverse(m.select_cols(cols));
  Matrix<F> s(m.cols(), m.rows());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t j = 0; j < m.rows(); ++j) s(cols[k], j) = (*inv)(k, j);
  return s;
}

}  // namespace quiverrep
