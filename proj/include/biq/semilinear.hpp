#pragma once

#include "biq/cmatrix.hpp"

#include <cstdint>
#include <span>

namespace biq {
struct IsoResult;
}

namespace biq::semilinear {

enum class MapKind { Linear, Semilinear };

/// A linear or semilinear map in fixed bases. For a semilinear map the matrix M
/// acts by x -> conj(M x), i.e. the columns of M are the conjugated images of
/// the basis vectors.
struct Map {
  MapKind kind = MapKind::Linear;
  CMatrix matrix;

  friend bool operator==(const Map&, const Map&) = default;
};

/// Linear: M x. Semilinear: conj(M x). Throws ValidationError on shape mismatch.
CVector apply_map(MapKind kind, const CMatrix& m, std::span<const GaussianRational> x);
CVector apply_map(const Map& f, std::span<const GaussianRational> x);

/// The map "outer after inner". Exactly one semilinear factor gives a
/// semilinear result; two give a linear one. Matrices: B*A when the inner map is
/// linear, conj(B)*A when it is semilinear.
Map compose(const Map& outer, const Map& inner);

/// Matrix of the same map after changing bases with transition matrices S_target
/// and S_source: S_target^{-1} M S_source (linear) or conj(S_target)^{-1} M S_source
/// (semilinear). Throws SingularMatrixError.
CMatrix change_of_basis(MapKind kind, const CMatrix& m, const CMatrix& s_target, const CMatrix& s_source);

/// Decides whether conj(S)^{-1} A S = B for some invertible S, as an isomorphism
/// problem on the biquiver with one dashed loop. A Yes verdict carries S.
IsoResult are_consimilar(const CMatrix& a, const CMatrix& b, int trials, std::uint64_t seed);

}  // namespace biq::semilinear
