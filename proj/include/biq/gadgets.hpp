#pragma once

#include "biq/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace biq::gadgets {

// Embeddings of matrix problems into representations, used as evidence for
// infinite and wild type. Every builder reproduces a fixed block layout with
// n x n blocks; the layouts are part of the interface.

/// Arrow ids alpha_1..alpha_r of a simple cycle (r = 1 is a loop), in walking order.
/// The first cycle closed by an arrow outside a spanning forest, that arrow last.
std::optional<std::vector<std::string>> find_cycle(const Biquiver& g);

/// The cycle gadget P(M): every cycle vertex gets dimension n, alpha_1..alpha_{r-1}
/// carry I_n, alpha_r carries M, all other arrows are zero. Throws ValidationError if
/// the ids do not form a simple cycle or M is not square.
MatrixRepresentation cycle(const Biquiver& g, const std::vector<std::string>& cycle_arrows, const CMatrix& m);
/// Same, on the cycle found by find_cycle.
MatrixRepresentation cycle(const Biquiver& g, const CMatrix& m);

enum class Which { G1, G2, G3, G4 };

/// G1: dashed loop "alpha1" at 1, full "alpha" 1->2.   G2: the same with "alpha" 2->1.
/// G3: full loop "alpha1" and dashed loop "alpha2".    G4: two dashed loops "alpha1", "alpha2".
Biquiver biquiver(Which which);

/// G1: alpha1 = [[0,P],[I,Q]], alpha = [0 I].  G2: alpha1 as G1, alpha = [I;0].
MatrixRepresentation companion(Which which, const CMatrix& p, const CMatrix& q);

/// G3: alpha1 = [[0,I],[0,0]], alpha2 = diag(P,Q).
/// G4: alpha1 = 4x4 block shift (I on the superdiagonal); alpha2 has P in block (2,1)
/// and Q in block (4,3), zeros elsewhere.
MatrixRepresentation shift(Which which, const CMatrix& p, const CMatrix& q);

/// Base change carrying shift(G4, P, Q) to shift(G4, S^{-1}PS, S^{-1}QS):
/// diag(S, conj S, S, conj S).
BaseChange g4_block_certificate(const CMatrix& s);

}  // namespace biq::gadgets
