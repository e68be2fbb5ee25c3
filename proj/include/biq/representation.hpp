#pragma once

#include "biq/biquiver.hpp"
#include "biq/cmatrix.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace biq {

/// One invertible d_v x d_v matrix per vertex.
using BaseChange = std::vector<CMatrix>;

/// Matrix representation: a d_v x d_u complex matrix for every arrow u -> v,
/// full or dashed. Zero-dimensional vertices are allowed (empty matrices).
class MatrixRepresentation {
public:
  MatrixRepresentation() = default;
  /// `matrices` is indexed like g.arrows(). Throws ValidationError on any shape mismatch.
  MatrixRepresentation(Biquiver g, DimensionVector dims, std::vector<CMatrix> matrices);

  /// All-zero representation of the given dimension.
  static MatrixRepresentation zero(const Biquiver& g, DimensionVector dims);

  const Biquiver& biquiver() const { return graph_; }
  const DimensionVector& dims() const { return dims_; }
  int dim(Vertex v) const { return dims_[static_cast<std::size_t>(v)]; }
  int total_dimension() const;
  const std::vector<CMatrix>& matrices() const { return matrices_; }
  const CMatrix& matrix(std::size_t arrow) const { return matrices_[arrow]; }
  const CMatrix& matrix(std::string_view id) const { return matrices_[graph_.index_of(id)]; }

  friend bool operator==(const MatrixRepresentation&, const MatrixRepresentation&) = default;

private:
  Biquiver graph_;
  DimensionVector dims_;
  std::vector<CMatrix> matrices_;
};

/// Block-diagonal sum, summand order preserved. Throws ValidationError on biquiver mismatch.
MatrixRepresentation direct_sum(const MatrixRepresentation& a, const MatrixRepresentation& b);
/// Sum of a list; the empty sum is the zero-dimensional representation of g.
MatrixRepresentation direct_sum(const Biquiver& g, std::span<const MatrixRepresentation> parts);

/// B_alpha = S_v^{-1} A_alpha S_u for full alpha: u -> v and
/// conj(S_v)^{-1} A_alpha S_u for dashed alpha. Throws SingularMatrixError / ValidationError.
MatrixRepresentation apply_base_change(const MatrixRepresentation& a, std::span<const CMatrix> s);

BaseChange identity_base_change(const DimensionVector& dims);
/// Vertexwise product: changing by `first` then by `then` equals changing by first*then.
BaseChange compose_base_change(std::span<const CMatrix> first, std::span<const CMatrix> then);
/// Vertexwise block-diagonal sum.
BaseChange block_diagonal(std::span<const CMatrix> a, std::span<const CMatrix> b);

/// Entries are Rng::gaussian(entry_bound) draws, deterministic in `seed`.
MatrixRepresentation random_representation(const Biquiver& g, const DimensionVector& dims, int entry_bound,
                                            std::uint64_t seed);

}  // namespace biq
