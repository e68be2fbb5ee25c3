#pragma once

#include "biq/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace biq {

using QVector = std::vector<Rational>;

/// Dense rational matrix used for the real-linear systems behind Hom spaces,
/// Tits forms and endomorphism algebras.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of {x : Mx = 0} in reduced form: basis[j] has a 1 at free[j] and a 0 at
/// every other free position, so the coordinates of any kernel vector in this
/// basis are simply its entries at the free positions.
struct Nullspace {
  std::vector<QVector> basis;
  std::vector<std::size_t> free;
};

Nullspace nullspace(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Solves M x = b exactly; nullopt when inconsistent. Any solution when underdetermined.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

}  // namespace biq
