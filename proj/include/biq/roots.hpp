#pragma once

#include "biq/biquiver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace biq::roots {

/// All nonzero z >= 0 with q_G(z) == value, in lexicographic order.
///
/// For a positive definite Tits form the set is finite and `bound` is ignored.
/// Otherwise `bound` caps every coordinate and is required (PreconditionError
/// when absent). Throws PreconditionError for disconnected input.
///
/// The search fixes z_1..z_k in turn. For each k it uses the exact infimum of
/// q over real values of the remaining coordinates (obtained by eliminating
/// variables from the back while the form stays bounded below); that infimum
/// is a quadratic in z_k, which yields a finite integer interval whenever its
/// leading coefficient is positive.
std::vector<DimensionVector> roots_with_value(const Biquiver& g, std::int64_t value,
                                              std::optional<int> bound = std::nullopt);

/// Number of positive roots (q = 1). Requires representation-finite g.
std::size_t positive_root_count(const Biquiver& g);

}  // namespace biq::roots
