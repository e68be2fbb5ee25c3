#include "biq/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace biq {

namespace {

// Sparse-row Gauss-Jordan. Rows are kept as (column, value) lists because the
// morphism systems are very sparse and fill-in stays moderate.
struct SparseRow {
  std::vector<std::pair<std::size_t, Rational>> entries;  // sorted by column
};

struct Reduced {
  std::vector<SparseRow> rows;  // rows[k] has its pivot at pivots[k], pivot normalised to 1
  std::vector<std::size_t> pivots;
};

void axpy_row(SparseRow& target, const Rational& factor, const SparseRow& source) {
  // target -= factor * source
  std::vector<std::pair<std::size_t, Rational>> merged;
  merged.reserve(target.entries.size() + source.entries.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.entries.size() || j < source.entries.size()) {
    if (j == source.entries.size() ||
        (i < target.entries.size() && target.entries[i].first < source.entries[j].first)) {
      merged.push_back(std::move(target.entries[i++]));
    } else if (i == target.entries.size() || source.entries[j].first < target.entries[i].first) {
      merged.emplace_back(source.entries[j].first, -factor * source.entries[j].second);
      ++j;
    } else {
      Rational v = target.entries[i].second - factor * source.entries[j].second;
      if (sgn(v) != 0)
        merged.emplace_back(target.entries[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target.entries = std::move(merged);
}

const Rational* lookup(const SparseRow& row, std::size_t col) {
  for (const auto& [c, v] : row.entries) {
    if (c == col)
      return &v;
    if (c > col)
      break;
  }
  return nullptr;
}

Reduced reduce(const QMatrix& m) {
  std::vector<SparseRow> pending;
  pending.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0)
        row.entries.emplace_back(c, m(r, c));
    if (!row.entries.empty())
      pending.push_back(std::move(row));
  }

  // Incremental elimination: each incoming row is reduced against the current
  // basis; if something survives it becomes a new pivot row and is used to
  // clear its pivot column from the existing rows.
  Reduced out;
  for (auto& row : pending) {
    for (std::size_t k = 0; k < out.rows.size() && !row.entries.empty(); ++k) {
      if (const Rational* v = lookup(row, out.pivots[k])) {
        Rational f = *v;
        axpy_row(row, f, out.rows[k]);
      }
    }
    if (row.entries.empty())
      continue;
    Rational inv = 1 / row.entries.front().second;
    for (auto& e : row.entries)
      e.second *= inv;
    std::size_t pivot = row.entries.front().first;
    for (auto& existing : out.rows) {
      if (const Rational* v = lookup(existing, pivot)) {
        Rational f = *v;
        axpy_row(existing, f, row);
      }
    }
    out.rows.push_back(std::move(row));
    out.pivots.push_back(pivot);
  }
  return out;
}

}  // namespace

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Nullspace nullspace(const QMatrix& m) {
  Reduced red = reduce(m);
  std::vector<int> pivot_row(m.cols(), -1);
  for (std::size_t k = 0; k < red.pivots.size(); ++k)
    pivot_row[red.pivots[k]] = static_cast<int>(k);

  Nullspace ns;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (pivot_row[c] < 0)
      ns.free.push_back(c);

  std::vector<int> free_index(m.cols(), -1);
  for (std::size_t j = 0; j < ns.free.size(); ++j)
    free_index[ns.free[j]] = static_cast<int>(j);

  ns.basis.assign(ns.free.size(), QVector(m.cols()));
  for (std::size_t j = 0; j < ns.free.size(); ++j)
    ns.basis[j][ns.free[j]] = 1;
  for (std::size_t k = 0; k < red.rows.size(); ++k) {
    for (const auto& [c, v] : red.rows[k].entries) {
      if (c == red.pivots[k])
        continue;
      // fully reduced: every non-pivot entry sits in a free column
      ns.basis[static_cast<std::size_t>(free_index[c])][red.pivots[k]] = -v;
    }
  }
  return ns;
}

std::size_t rank(const QMatrix& m) { return reduce(m).pivots.size(); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("rhs length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Reduced red = reduce(aug);
  QVector x(m.cols());
  for (std::size_t k = 0; k < red.rows.size(); ++k) {
    if (red.pivots[k] == m.cols())
      return std::nullopt;
    if (const Rational* v = lookup(red.rows[k], m.cols()))
      x[red.pivots[k]] = *v;
  }
  return x;
}

}  // namespace biq
