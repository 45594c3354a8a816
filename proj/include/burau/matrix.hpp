#pragma once

#include "burau/laurent.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace burau {

/// Dense row-major matrix over a (possibly noncommutative) ring. Operators act
/// on row vectors from the right, so the product A*B means "A, then B".
template <class Ring>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Ring>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Ring& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Ring& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Ring& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch in sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch in sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Applies f to every entry.
  template <class F>
  auto map(F f) const {
    using Out = decltype(f(std::declval<const Ring&>()));
    Matrix<Out> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  static bool is_zero(const Ring& x) { return x == Ring{}; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Ring> data_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

/// Fraction-free Gaussian elimination (Bareiss); every division is exact.
inline LaurentPoly determinant(LaurentMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  LaurentPoly sign = 1;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("determinant: inexact Bareiss step");
        m(i, j) = std::move(*q);
      }
      m(i, k) = {};
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Minor with row r and column c deleted.
template <class Ring>
Matrix<Ring> minor_matrix(const Matrix<Ring>& m, std::size_t r, std::size_t c) {
  Matrix<Ring> out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

/// Inverse of a matrix whose determinant is a unit ±t^k, via the adjugate.
inline LaurentMatrix inverse_over_laurent(const LaurentMatrix& m) {
  const LaurentPoly det = determinant(m);
  if (!det.is_unit()) throw std::domain_error("inverse_over_laurent: determinant is not a unit");
  const LaurentPoly inv_det = det.unit_inverse();
  const std::size_t n = m.rows();
  LaurentMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly cof = determinant(minor_matrix(m, j, i));
      if ((i + j) % 2) cof = -cof;
      r(i, j) = cof * inv_det;
    }
  return r;
}

}  // namespace burau
