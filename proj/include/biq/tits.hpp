#pragma once

#include "biq/biquiver.hpp"
#include "biq/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace biq::tits {

/// Symmetric Gram matrix Q of the Tits form: q(z) = z^T Q z.
/// Q(u,u) = 1 - loops(u); Q(u,v) = -(arrows between u and v)/2 for u != v.
class TitsGram {
public:
  TitsGram() = default;
  /// Throws ValidationError when `entries` is not t*t.
  TitsGram(int t, std::vector<Rational> entries);

  int size() const { return t_; }
  const Rational& operator()(int u, int v) const { return q_[static_cast<std::size_t>(u * t_ + v)]; }
  bool is_symmetric() const;
  QMatrix as_matrix() const;

  friend bool operator==(const TitsGram&, const TitsGram&) = default;

private:
  int t_ = 0;
  std::vector<Rational> q_;
};

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

std::string_view to_string(Definiteness d);

TitsGram gram_matrix(const Biquiver& g);

/// sum z_i^2 - sum over arrows u->v of z_u z_v. Throws ValidationError on length mismatch.
std::int64_t evaluate(const Biquiver& g, const DimensionVector& z);

/// z^T Q z; must be an integer for Gram matrices of biquivers.
Rational evaluate(const TitsGram& q, const DimensionVector& z);

/// Coefficients c_0..c_t of det(lambda*I - Q) = sum_k c_k lambda^(t-k), via Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const TitsGram& q);

/// Exact three-way verdict from the signs of the characteristic-polynomial
/// coefficients: all eigenvalues are >= 0 iff (-1)^k c_k >= 0 for every k.
/// PositiveSemidefinite means psd and singular. Throws ValidationError if Q is not symmetric.
Definiteness definiteness(const TitsGram& q);

/// Primitive positive integer generator of ker(Q), when Q is psd, singular,
/// has a one-dimensional kernel, and that kernel has a nonnegative generator.
std::optional<DimensionVector> radical_vector(const TitsGram& q);

}  // namespace biq::tits
