#include "biq/semilinear.hpp"

#include "biq/error.hpp"
#include "biq/morphisms.hpp"
#include "biq/representation.hpp"

namespace biq::semilinear {

CVector apply_map(MapKind kind, const CMatrix& m, std::span<const GaussianRational> x) {
  CVector y = m * x;
  if (kind == MapKind::Semilinear)
    return conj(y);
  return y;
}

CVector apply_map(const Map& f, std::span<const GaussianRational> x) { return apply_map(f.kind, f.matrix, x); }

Map compose(const Map& outer, const Map& inner) {
  if (outer.matrix.cols() != inner.matrix.rows())
    throw ValidationError("composition shape mismatch");
  const bool outer_semi = outer.kind == MapKind::Semilinear;
  const bool inner_semi = inner.kind == MapKind::Semilinear;
  Map out;
  out.kind = outer_semi != inner_semi ? MapKind::Semilinear : MapKind::Linear;
  out.matrix = inner_semi ? outer.matrix.conj() * inner.matrix : outer.matrix * inner.matrix;
  return out;
}

CMatrix change_of_basis(MapKind kind, const CMatrix& m, const CMatrix& s_target, const CMatrix& s_source) {
  if (s_target.rows() != m.rows() || s_source.rows() != m.cols())
    throw ValidationError("transition matrix shape mismatch");
  if (!s_source.is_invertible())
    throw SingularMatrixError("source transition matrix is singular");
  CMatrix left = kind == MapKind::Semilinear ? s_target.conj() : s_target;
  return left.inverse() * m * s_source;
}

IsoResult are_consimilar(const CMatrix& a, const CMatrix& b, int trials, std::uint64_t seed) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ValidationError("consimilarity needs square matrices of equal size");
  Biquiver loop(1, {{"a", 0, 0, ArrowKind::Dashed}});
  const int n = static_cast<int>(a.rows());
  MatrixRepresentation ra(loop, {n}, {a});
  MatrixRepresentation rb(loop, {n}, {b});
  SearchOptions options;
  options.trials = trials;
  options.seed = seed;
  return are_isomorphic(ra, rb, options);
}

}  // namespace biq::semilinear
