#pragma once

// Brute-force reference implementations. They share only the scalar types with
// the library and are deliberately naive.

#include "biq/biquiver.hpp"
#include "biq/cmatrix.hpp"

#include <string>
#include <vector>

namespace oracle {

using biq::CMatrix;
using biq::GaussianRational;
using biq::Rational;

using RMatrix = std::vector<std::vector<Rational>>;

/// Symmetric Gram matrix of sum x_i^2 - sum_arrows x_u x_v, built straight from the arrow list.
RMatrix tits_gram(const biq::Biquiver& g);

/// "PositiveDefinite", "PositiveSemidefinite" or "Indefinite", from leading
/// principal minors (Sylvester) and from all principal minors.
std::string definiteness(const RMatrix& q);

long long tits_value(const biq::Biquiver& g, const std::vector<int>& z);

/// Every nonzero z in [0, bound]^t with q(z) == value, lexicographic.
std::vector<std::vector<int>> brute_roots(const biq::Biquiver& g, long long value, int bound);

/// Cofactor-free Gaussian elimination determinant.
GaussianRational det(CMatrix m);

/// Similarity of square matrices of size <= 2: equal characteristic
/// polynomials and both or neither scalar.
bool similar_small(const CMatrix& m, const CMatrix& n);

/// Consimilarity invariants: characteristic polynomial of M conj(M) and rank of M.
/// Different invariants prove non-consimilarity.
bool consimilarity_invariants_differ(const CMatrix& m, const CMatrix& n);

/// Simultaneous-similarity invariants of a pair: traces and determinants of
/// P and Q and the trace of PQ. Different invariants prove non-equivalence.
bool pair_invariants_differ(const CMatrix& p, const CMatrix& q, const CMatrix& p2, const CMatrix& q2);

}  // namespace oracle
