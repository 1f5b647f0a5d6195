#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "flatcone/exact.hpp"

namespace flatcone {

/// Dense row-major matrix. Small and exact; no expression templates.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw Error("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows_if_empty = 0) {
    Matrix m(cols.empty() ? rows_if_empty : cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != m.rows_) throw Error("ragged matrix columns");
      for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  std::vector<T> column_vector(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  Matrix<T> p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw Error("matrix-vector dimension mismatch");
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Echelon {
  RatMatrix reduced;                 // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the rationals.
Echelon reduced_row_echelon(RatMatrix m);

std::size_t rank_rational(const RatMatrix& m);

/// Bareiss fraction-free elimination; every intermediate value stays an integer.
std::size_t rank_fraction_free(IntMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, in increasing free-column order.
/// Each vector has a 1 at its free column and 0 at the other free columns.
std::vector<RatVector> null_space(const RatMatrix& m);

/// Basis of the integer solutions {x in Z^n : m x = 0}. The basis spans every integer
/// solution (it is saturated), and it is returned in row Hermite normal form.
std::vector<IntVector> integer_null_space(const IntMatrix& m);

/// Row-style Hermite normal form: pivots positive, entries above a pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix m);

/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

Rational determinant(RatMatrix m);

/// Throws if singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace flatcone
