#pragma once

// Operators on V^{⊗k}, dim V = 2, over Z[t, t^-1].
//
// Basis of V^{⊗k}: e_{x_1} ⊗ ... ⊗ e_{x_k} has index Σ (x_p - 1) 2^{k-p}, so
// the first tensor factor is the most significant bit and
// kronecker(A, B) is the usual Kronecker product. Rows hold the coefficients
// of the images of basis vectors; operators act on row vectors from the right.

#include "burau/matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace burau {

class TensorOperator {
 public:
  TensorOperator() = default;
  TensorOperator(int arity, LaurentMatrix m) : arity_(arity), m_(std::move(m)) {
    if (arity < 0 || arity > 16) throw std::invalid_argument("TensorOperator: unsupported arity");
    const std::size_t d = dim_of(arity);
    if (m_.rows() != d || m_.cols() != d) throw std::invalid_argument("TensorOperator: matrix size is not 2^arity");
  }

  static std::size_t dim_of(int arity) { return std::size_t{1} << static_cast<unsigned>(arity); }
  static TensorOperator identity(int arity) { return {arity, LaurentMatrix::identity(dim_of(arity))}; }

  int arity() const { return arity_; }
  std::size_t dim() const { return m_.rows(); }
  const LaurentMatrix& matrix() const { return m_; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend bool operator==(const TensorOperator&, const TensorOperator&) = default;

 private:
  int arity_ = 0;
  LaurentMatrix m_ = LaurentMatrix::identity(1);
};

/// A then B.
inline TensorOperator compose(const TensorOperator& a, const TensorOperator& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("compose: arity mismatch");
  return {a.arity(), a.matrix() * b.matrix()};
}

inline TensorOperator kronecker(const TensorOperator& a, const TensorOperator& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  LaurentMatrix m(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          if (!b(k, l).is_zero()) m(i * db + k, j * db + l) = a(i, j) * b(k, l);
    }
  return {a.arity() + b.arity(), std::move(m)};
}

inline TensorOperator inverse(const TensorOperator& a) { return {a.arity(), inverse_over_laurent(a.matrix())}; }

/// 1^{⊗(i-1)} ⊗ X ⊗ 1^{⊗(n-i-1)} for a two-factor X, 1 ≤ i ≤ n-1.
inline TensorOperator place_on_factors(const TensorOperator& x, int i, int n) {
  if (x.arity() != 2) throw std::invalid_argument("place_on_factors: need arity 2");
  if (i < 1 || i > n - 1) throw std::out_of_range("place_on_factors: position out of range");
  return kronecker(kronecker(TensorOperator::identity(i - 1), x), TensorOperator::identity(n - i - 1));
}

/// M · (1^{⊗(i-1)} ⊗ X ⊗ 1^{⊗(n-i-1)}) without forming the big operator.
inline LaurentMatrix right_apply_on_factors(const LaurentMatrix& m, const TensorOperator& x, int i, int n) {
  const std::size_t dim = TensorOperator::dim_of(n);
  if (m.cols() != dim) throw std::invalid_argument("right_apply_on_factors: dimension mismatch");
  const unsigned lo_bits = static_cast<unsigned>(n - i - 1);
  LaurentMatrix r(m.rows(), dim);
  for (std::size_t row = 0; row < m.rows(); ++row)
    for (std::size_t col = 0; col < dim; ++col) {
      const LaurentPoly& v = m(row, col);
      if (v.is_zero()) continue;
      const std::size_t pair = (col >> lo_bits) & 3u;
      const std::size_t base = col & ~(std::size_t{3} << lo_bits);
      for (std::size_t out = 0; out < 4; ++out) {
        const LaurentPoly& c = x(pair, out);
        if (!c.is_zero()) r(row, base | (out << lo_bits)) += v * c;
      }
    }
  return r;
}

/// X with sigma == X ⊗ 1 (sigma of arity 3), if sigma has that form.
inline std::optional<TensorOperator> factor_as_left(const TensorOperator& sigma) {
  if (sigma.arity() != 3) throw std::invalid_argument("factor_as_left: need arity 3");
  LaurentMatrix x(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) x(a, b) = sigma(2 * a, 2 * b);
  TensorOperator candidate(2, x);
  if (kronecker(candidate, TensorOperator::identity(1)) != sigma) return std::nullopt;
  return candidate;
}

/// X with sigma == 1 ⊗ X (sigma of arity 3), if sigma has that form.
inline std::optional<TensorOperator> factor_as_right(const TensorOperator& sigma) {
  if (sigma.arity() != 3) throw std::invalid_argument("factor_as_right: need arity 3");
  LaurentMatrix x(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) x(a, b) = sigma(a, b);
  TensorOperator candidate(2, x);
  if (kronecker(TensorOperator::identity(1), candidate) != sigma) return std::nullopt;
  return candidate;
}

inline LaurentPoly trace(const TensorOperator& a) {
  LaurentPoly s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

/// Partial trace over the last tensor factor.
inline TensorOperator partial_trace_last(const TensorOperator& a) {
  if (a.arity() < 1) throw std::invalid_argument("partial_trace_last: arity 0");
  const std::size_t d = a.dim() / 2;
  LaurentMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = a(2 * i, 2 * j) + a(2 * i + 1, 2 * j + 1);
  return {a.arity() - 1, std::move(m)};
}

}  // namespace burau
