#pragma once

#include "biq/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace biq {

using CVector = std::vector<GaussianRational>;

/// Dense complex-rational matrix, row-major. 0xN and Nx0 shapes are valid.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  /// Row-list literal, e.g. CMatrix{{1, 0}, {0, GaussianRational::i()}}.
  CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static CMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix identity(std::size_t n);
  static CMatrix scalar(std::size_t n, const GaussianRational& value);
  static CMatrix column(std::span<const GaussianRational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<GaussianRational>& entries() const { return data_; }

  bool is_zero() const;
  CMatrix conj() const;
  CMatrix transpose() const;

  /// Exact inverse by Gauss-Jordan. Throws SingularMatrixError.
  CMatrix inverse() const;
  bool is_invertible() const;
  std::size_t rank() const;
  GaussianRational determinant() const;

  /// Columns spanning the image (taken from the original columns at pivot positions).
  CMatrix column_space() const;
  /// Columns forming a basis of the right kernel.
  CMatrix kernel() const;

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const GaussianRational& s, CMatrix a);
  friend CVector operator*(const CMatrix& a, std::span<const GaussianRational> x);

  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

CMatrix block_diagonal(const CMatrix& a, const CMatrix& b);
/// Horizontal concatenation; row counts must agree.
CMatrix hconcat(const CMatrix& a, const CMatrix& b);
CVector conj(std::span<const GaussianRational> x);

std::ostream& operator<<(std::ostream& os, const CMatrix& m);

}  // namespace biq
