#pragma once

#include "biq/representation.hpp"

#include <set>
#include <string>
#include <variant>

namespace biq::conjugation {

/// Conjugation at u: every non-loop arrow with an endpoint at u switches between
/// full and dashed. Loops keep their kind, and no direction changes.
Biquiver conjugate_biquiver(const Biquiver& g, Vertex u);

/// Representation of the conjugated biquiver: matrices of arrows starting at u
/// (loops at u included) are conjugated entrywise, all others are kept.
MatrixRepresentation conjugate_representation(const MatrixRepresentation& a, Vertex u);

/// If S carries A to B, then R carries A^u to B^u, where R_u = conj(S_u) and R_v = S_v otherwise.
BaseChange transport_isomorphism(std::span<const CMatrix> s, Vertex u);

/// Vertices to conjugate at; conjugations at distinct vertices commute, so order is irrelevant.
struct ConjugationPlan {
  std::set<Vertex> vertices;
};

struct Impossible {
  std::string reason;
};

using EliminationResult = std::variant<ConjugationPlan, Impossible>;

/// Solves c(u) xor c(v) = dashed(e) over GF(2) for every non-loop arrow e between u
/// and v: propagate from c(root) = 0 along a spanning tree, then check the other
/// arrows. Dashed loops can never be removed. Throws PreconditionError when g is
/// disconnected.
EliminationResult dash_elimination_plan(const Biquiver& g);

Biquiver apply_plan(const Biquiver& g, const ConjugationPlan& plan);
MatrixRepresentation apply_plan(const MatrixRepresentation& a, const ConjugationPlan& plan);

}  // namespace biq::conjugation
