#pragma once

#include "biq/linalg.hpp"
#include "biq/representation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace biq {

/// A morphism A -> B: one d_B(v) x d_A(v) matrix per vertex.
using MorphismTuple = std::vector<CMatrix>;

/// True iff B_a F_u = F_v A_a for every full arrow a: u -> v and
/// B_a F_u = conj(F_v) A_a for every dashed one.
bool is_morphism(const MatrixRepresentation& a, const MatrixRepresentation& b, std::span<const CMatrix> f);

/// Real basis of Hom(A, B) with rational coordinates. The real unknowns are the
/// real and imaginary parts of all F_v entries; each basis tuple has coordinate 1
/// at its own free unknown and 0 at the others.
class MorphismBasis {
public:
  MorphismBasis() = default;
  MorphismBasis(Biquiver g, DimensionVector source, DimensionVector target, std::vector<MorphismTuple> basis,
                std::vector<std::size_t> free);

  const Biquiver& biquiver() const { return graph_; }
  const DimensionVector& source_dims() const { return source_; }
  const DimensionVector& target_dims() const { return target_; }
  const std::vector<MorphismTuple>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  /// Coordinates of a tuple known to lie in Hom(A, B).
  QVector coordinates(std::span<const CMatrix> f) const;
  MorphismTuple combination(std::span<const Rational> coeffs) const;
  MorphismTuple zero() const;

private:
  Biquiver graph_;
  DimensionVector source_;
  DimensionVector target_;
  std::vector<MorphismTuple> basis_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> offsets_;
};

/// Throws ValidationError when the biquivers differ.
MorphismBasis hom_basis(const MatrixRepresentation& a, const MatrixRepresentation& b);

/// Vertexwise product: (f after g)_v = f_v g_v.
MorphismTuple compose(std::span<const CMatrix> f, std::span<const CMatrix> g);

/// Sampling configuration for the randomized procedures.
struct SearchOptions {
  int trials = 8;
  std::uint64_t seed = 1;
  int coeff_bound = 10000;
};

enum class Verdict { Yes, No, ProbablyNo };
std::string to_string(Verdict v);

struct IsoResult {
  Verdict verdict = Verdict::No;
  /// For Yes: S with apply_base_change(A, S) == B.
  BaseChange certificate;
  std::string reason;
  std::size_t hom_dimension = 0;
  int trials = 0;
  int coeff_bound = 0;
  /// For ProbablyNo: if an isomorphism existed, the chance that every trial
  /// missed it is at most this (Schwartz-Zippel on the product of determinants).
  Rational failure_bound;
};

/// Throws ValidationError when the biquivers differ.
IsoResult are_isomorphic(const MatrixRepresentation& a, const MatrixRepresentation& b,
                         const SearchOptions& options = {});

/// apply_base_change(A, S) == B with every S_v invertible.
bool verify_isomorphism(const MatrixRepresentation& a, const MatrixRepresentation& b, std::span<const CMatrix> s);

struct EndAlgebra {
  MorphismBasis basis;
  /// b_i b_j = sum_k structure[i][j][k] b_k.
  std::vector<std::vector<QVector>> structure;
  QVector identity;
};

EndAlgebra end_algebra(const MatrixRepresentation& a);

enum class LeafStatus { CertifiedIndecomposable, ProbablyIndecomposable };
std::string to_string(LeafStatus s);

struct Decomposition {
  std::vector<MatrixRepresentation> summands;
  /// apply_base_change(A, certificate) == direct_sum(summands).
  BaseChange certificate;
  std::vector<LeafStatus> leaf_status;
};

/// Recursive Fitting splitting with rational idempotents. Summands with a
/// certified status are indecomposable; the others merely resisted every
/// attempted split.
Decomposition decompose(const MatrixRepresentation& a, const SearchOptions& options = {});

/// Certified leaf test: End(A) modulo its radical is R or C. The radical is the
/// kernel of the real trace form (b, c) -> 2 Re tr(bc), exact in characteristic 0.
bool certified_indecomposable(const MatrixRepresentation& a);

bool verify_decomposition(const MatrixRepresentation& a, const Decomposition& d);

struct SummandMatch {
  std::size_t x = 0;
  std::size_t y = 0;
  /// apply_base_change(X[x], certificate) == Y[y].
  BaseChange certificate;
};

/// Greedy matching by dimension vector and isomorphism. Absent when the lists
/// differ in length or some summand finds no isomorphic partner.
std::optional<std::vector<SummandMatch>> krull_schmidt_compare(std::span<const MatrixRepresentation> x,
                                                               std::span<const MatrixRepresentation> y,
                                                               const SearchOptions& options = {});

}  // namespace biq
