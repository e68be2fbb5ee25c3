#include "biq/cmatrix.hpp"

#include "biq/error.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace biq {

namespace {

struct Echelon {
  CMatrix reduced;  // reduced row echelon form
  std::vector<std::size_t> pivots;
  GaussianRational det_factor{1};
};

// Gauss-Jordan over Q(i). det_factor tracks the product of pivots and row swaps
// so that det(original) = det_factor for square full-rank input.
Echelon row_reduce(CMatrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero())
      ++p;
    if (p == rows)
      continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k)
        std::swap(m(p, k), m(r, k));
      out.det_factor = -out.det_factor;
    }
    GaussianRational pivot = m(r, c);
    out.det_factor *= pivot;
    GaussianRational inv = pivot.inverse();
    for (std::size_t k = c; k < cols; ++k)
      m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero())
        continue;
      GaussianRational f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(r, k).is_zero())
          m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw ValidationError("matrix entry count does not match shape");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) { return scalar(n, 1); }

CMatrix CMatrix::scalar(std::size_t n, const GaussianRational& value) {
  CMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = value;
  return m;
}

CMatrix CMatrix::column(std::span<const GaussianRational> values) {
  return {values.size(), 1, std::vector<GaussianRational>(values.begin(), values.end())};
}

bool CMatrix::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero())
      return false;
  return true;
}

CMatrix CMatrix::conj() const {
  CMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = data_[k].conj();
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(c, r) = (*this)(r, c);
  return out;
}

CMatrix CMatrix::inverse() const {
  if (!is_square())
    throw SingularMatrixError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  CMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw SingularMatrixError("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

bool CMatrix::is_invertible() const { return is_square() && rank() == rows_; }

std::size_t CMatrix::rank() const { return row_reduce(*this).pivots.size(); }

GaussianRational CMatrix::determinant() const {
  if (!is_square())
    throw ValidationError("determinant of a non-square matrix");
  Echelon e = row_reduce(*this);
  if (e.pivots.size() < rows_)
    return 0;
  return e.det_factor;
}

CMatrix CMatrix::column_space() const {
  Echelon e = row_reduce(*this);
  CMatrix out(rows_, e.pivots.size());
  for (std::size_t j = 0; j < e.pivots.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r)
      out(r, j) = (*this)(r, e.pivots[j]);
  return out;
}

CMatrix CMatrix::kernel() const {
  Echelon e = row_reduce(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c])
      free.push_back(c);
  CMatrix out(cols_, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    out(free[j], j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      out(e.pivots[i], j) = -e.reduced(i, free[j]);
  }
  return out;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_)
    throw std::out_of_range("matrix block out of range");
  CMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw std::out_of_range("matrix block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c)
      (*this)(r0 + r, c0 + c) = b(r, c);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValidationError("matrix shape mismatch in addition");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValidationError("matrix shape mismatch in subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] -= o.data_[k];
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_)
    throw ValidationError("matrix shape mismatch in product");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero())
        continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        out(r, c).add_product(x, b(k, c));
    }
  return out;
}

CMatrix operator*(const GaussianRational& s, CMatrix a) {
  for (auto& z : a.data_)
    z *= s;
  return a;
}

CVector operator*(const CMatrix& a, std::span<const GaussianRational> x) {
  if (a.cols_ != x.size())
    throw ValidationError("matrix-vector shape mismatch");
  CVector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      out[r].add_product(a(r, c), x[c]);
  return out;
}

CMatrix block_diagonal(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

CMatrix hconcat(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows())
    throw ValidationError("row count mismatch in hconcat");
  CMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

CVector conj(std::span<const GaussianRational> x) {
  CVector out;
  out.reserve(x.size());
  for (const auto& z : x)
    out.push_back(z.conj());
  return out;
}

std::ostream& operator<<(std::ostream& os, const CMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

}  // namespace biq
