#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "monocrem/bigint.hpp"
#include "monocrem/error.hpp"

namespace monocrem {

/// Dense integer matrix with exact arbitrary-precision entries, row-major.
/// Zero-dimensional matrices (0 rows and/or 0 columns) are legal values;
/// they show up as difference matrices of sets without linear syzygies.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-wise construction, mostly for tests and literals.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        fail(errc::length_mismatch, "ragged matrix initializer");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix& other) const = default;

  /// Order by shape first, then by row-major entry comparison. This is the
  /// order canonical forms are minimized and class lists are sorted in.
  bool operator<(const IntMatrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != other.data_[i]) return data_[i] < other.data_[i];
    return false;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const {
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
      for (std::size_t c = 0; c < col_idx.size(); ++c)
        s(r, c) = (*this)(row_idx[r], col_idx[c]);
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }

  /// row a -= q * row b
  void sub_row(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(a, c) -= q * (*this)(b, c);
  }

  /// col a -= q * col b
  void sub_col(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, a) -= q * (*this)(r, b);
  }

  void add_row(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(a, c) += (*this)(b, c);
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    fail(errc::dimension_mismatch, "matrix product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

/// Exact determinant by Bareiss fraction-free elimination. Every division
/// below is exact (the intermediate values are minors of the input).
inline BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols()) fail(errc::not_square, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace monocrem
