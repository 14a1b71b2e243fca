#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "racg/error.hpp"
#include "racg/poly.hpp"
#include "racg/quad.hpp"
#include "racg/rational.hpp"

namespace racg {

/// Dense row-major matrix over an exact ring (Rat, QuadElem, RatPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n, zero_like(one));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  /// Row-major copy of the entries, the flattening used for span computations.
  std::vector<T> flatten() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  T trace() const {
    T t = zero_like(data_.front());
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  /// The k×k upper-left block.
  Matrix leading_block(std::size_t k) const {
    Matrix b(k, k, data_.front());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
    return b;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using U = std::decay_t<decltype(fn(data_.front()))>;
    std::vector<U> v;
    v.reserve(data_.size());
    for (const auto& x : data_) v.push_back(fn(x));
    Matrix<U> out(rows_, cols_, v.front());
    for (std::size_t i = 0; i < v.size(); ++i) out(i / cols_, i % cols_) = std::move(v[i]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_, zero_like(a.data_.front()));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (racg::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] + b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] - b.data_[i];
    return c;
  }
  template <class S>
  friend Matrix operator*(const Matrix& a, const S& s) {
    Matrix c = a;
    for (auto& x : c.data_) x = x * s;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using QuadMatrix = Matrix<QuadElem>;
using PolyMatrix = Matrix<RatPoly>;

/// Throws Error(MixedRadicands) unless every entry shares one radicand.
inline void require_single_field(const QuadMatrix& m) {
  for (const auto& x : m.data())
    if (x.radicand() != m.data().front().radicand())
      throw Error(ErrorKind::MixedRadicands, "matrix entries use different radicands");
}
inline void require_single_field(const RatMatrix&) {}

/// Fraction-free determinant with row pivoting (Bareiss).
template <class T>
T determinant(Matrix<T> a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "determinant of an empty matrix");
  T prev = one_like(a(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return zero_like(a(0, 0));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = zero_like(prev);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..n, by Bareiss
/// elimination without pivoting; falls back to pivoted determinants of the
/// leading blocks once a zero pivot appears.
template <class T>
std::vector<T> leading_principal_minors(const Matrix<T>& m) {
  if (!m.is_square() || m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "leading minors");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  std::vector<T> minors;
  minors.reserve(n);
  minors.push_back(a(0, 0));
  T prev = one_like(a(0, 0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      for (std::size_t r = k + 2; r <= n; ++r) minors.push_back(determinant(m.leading_block(r)));
      return minors;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
    minors.push_back(a(k + 1, k + 1));
  }
  return minors;
}

/// Sylvester's criterion: every leading principal minor is positive.
template <class F>
bool is_positive_definite(const Matrix<F>& m) {
  for (const auto& minor : leading_principal_minors(m))
    if (sign_of(minor) <= 0) return false;
  return true;
}

/// Reduced row echelon form over a field; returns the pivot columns.
template <class F>
std::vector<std::size_t> reduce_rows(std::vector<std::vector<F>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const F inv = one_like(rows[r][c]) / rows[r][c];
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const F f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <class F>
std::size_t rank_of(std::vector<std::vector<F>> rows, std::size_t cols) {
  return reduce_rows(rows, cols).size();
}

template <class F>
std::size_t rank_of(const Matrix<F>& m) {
  std::vector<std::vector<F>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return rank_of(std::move(rows), m.cols());
}

/// Basis of {x : A·x = 0}, one vector per free column, free variable set to 1.
/// `column_order` permutes the elimination order of the unknowns; the span
/// returned is independent of it, the particular basis is not.
template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> rows, std::size_t cols,
                                         const F& zero,
                                         const std::vector<std::size_t>& column_order = {}) {
  std::vector<std::size_t> order = column_order;
  if (order.empty())
    for (std::size_t c = 0; c < cols; ++c) order.push_back(c);
  for (auto& row : rows) {
    std::vector<F> permuted;
    permuted.reserve(cols);
    for (std::size_t c : order) permuted.push_back(row[c]);
    row = std::move(permuted);
  }
  const auto pivots = reduce_rows(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, zero);
    v[order[free]] = one_like(zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[order[pivots[r]]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  std::vector<std::vector<F>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return kernel_basis(std::move(rows), m.cols(), zero_like(m(0, 0)));
}

template <class F>
std::vector<F> apply(const Matrix<F>& m, const std::vector<F>& v) {
  std::vector<F> out(m.rows(), zero_like(m(0, 0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out[i] = out[i] + m(i, j) * v[j];
  return out;
}

}  // namespace racg
