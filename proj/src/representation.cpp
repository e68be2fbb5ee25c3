#include "biq/representation.hpp"

#include "biq/error.hpp"
#include "biq/random.hpp"

#include <numeric>

namespace biq {

MatrixRepresentation::MatrixRepresentation(Biquiver g, DimensionVector dims, std::vector<CMatrix> matrices)
    : graph_(std::move(g)), dims_(std::move(dims)), matrices_(std::move(matrices)) {
  if (dims_.size() != static_cast<std::size_t>(graph_.vertex_count()))
    throw ValidationError("dimension vector has " + std::to_string(dims_.size()) + " entries, biquiver has " +
                          std::to_string(graph_.vertex_count()) + " vertices");
  for (int d : dims_)
    if (d < 0)
      throw ValidationError("negative dimension");
  if (matrices_.size() != graph_.arrow_count())
    throw ValidationError("expected one matrix per arrow");
  for (std::size_t k = 0; k < matrices_.size(); ++k) {
    const Arrow& a = graph_.arrow(k);
    const auto rows = static_cast<std::size_t>(dims_[a.to]);
    const auto cols = static_cast<std::size_t>(dims_[a.from]);
    if (matrices_[k].rows() != rows || matrices_[k].cols() != cols)
      throw ValidationError("arrow '" + a.id + "': expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " matrix, got " + std::to_string(matrices_[k].rows()) + "x" +
                            std::to_string(matrices_[k].cols()));
  }
}

MatrixRepresentation MatrixRepresentation::zero(const Biquiver& g, DimensionVector dims) {
  if (dims.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError("dimension vector length does not match the biquiver");
  std::vector<CMatrix> ms;
  for (const auto& a : g.arrows())
    ms.emplace_back(static_cast<std::size_t>(dims[a.to]), static_cast<std::size_t>(dims[a.from]));
  return {g, std::move(dims), std::move(ms)};
}

int MatrixRepresentation::total_dimension() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

MatrixRepresentation direct_sum(const MatrixRepresentation& a, const MatrixRepresentation& b) {
  if (a.biquiver() != b.biquiver())
    throw ValidationError("direct sum of representations of different biquivers");
  DimensionVector dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v)
    dims[v] = a.dims()[v] + b.dims()[v];
  std::vector<CMatrix> ms;
  ms.reserve(a.matrices().size());
  for (std::size_t k = 0; k < a.matrices().size(); ++k)
    ms.push_back(block_diagonal(a.matrix(k), b.matrix(k)));
  return {a.biquiver(), std::move(dims), std::move(ms)};
}

MatrixRepresentation direct_sum(const Biquiver& g, std::span<const MatrixRepresentation> parts) {
  MatrixRepresentation acc = MatrixRepresentation::zero(g, DimensionVector(static_cast<std::size_t>(g.vertex_count()), 0));
  for (const auto& p : parts)
    acc = direct_sum(acc, p);
  return acc;
}

MatrixRepresentation apply_base_change(const MatrixRepresentation& a, std::span<const CMatrix> s) {
  const Biquiver& g = a.biquiver();
  if (s.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError("base change needs one matrix per vertex");
  std::vector<CMatrix> inv;
  std::vector<CMatrix> conj_inv;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto d = static_cast<std::size_t>(a.dim(v));
    if (s[v].rows() != d || s[v].cols() != d)
      throw ValidationError("base change at vertex " + std::to_string(v + 1) + " must be " + std::to_string(d) + "x" +
                            std::to_string(d));
    inv.push_back(s[v].inverse());
    conj_inv.push_back(inv.back().conj());
  }
  std::vector<CMatrix> ms;
  ms.reserve(g.arrow_count());
  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    const Arrow& arr = g.arrow(k);
    const CMatrix& left = arr.is_dashed() ? conj_inv[arr.to] : inv[arr.to];
    ms.push_back(left * a.matrix(k) * s[arr.from]);
  }
  return {g, a.dims(), std::move(ms)};
}

BaseChange identity_base_change(const DimensionVector& dims) {
  BaseChange out;
  for (int d : dims)
    out.push_back(CMatrix::identity(static_cast<std::size_t>(d)));
  return out;
}

BaseChange compose_base_change(std::span<const CMatrix> first, std::span<const CMatrix> then) {
  if (first.size() != then.size())
    throw ValidationError("base change length mismatch");
  BaseChange out;
  for (std::size_t v = 0; v < first.size(); ++v)
    out.push_back(first[v] * then[v]);
  return out;
}

BaseChange block_diagonal(std::span<const CMatrix> a, std::span<const CMatrix> b) {
  if (a.size() != b.size())
    throw ValidationError("base change length mismatch");
  BaseChange out;
  for (std::size_t v = 0; v < a.size(); ++v)
    out.push_back(block_diagonal(a[v], b[v]));
  return out;
}

MatrixRepresentation random_representation(const Biquiver& g, const DimensionVector& dims, int entry_bound,
                                            std::uint64_t seed) {
  if (entry_bound < 1)
    throw ValidationError("entry bound must be at least 1");
  if (dims.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError("dimension vector length does not match the biquiver");
  Rng rng(seed);
  std::vector<CMatrix> ms;
  for (const auto& a : g.arrows())
    ms.push_back(rng.matrix(static_cast<std::size_t>(dims[a.to]), static_cast<std::size_t>(dims[a.from]), entry_bound));
  return {g, dims, std::move(ms)};
}

}  // namespace biq
