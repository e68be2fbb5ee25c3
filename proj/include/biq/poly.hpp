#pragma once

#include "biq/scalar.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace biq::poly {

/// Dense univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  QPoly monic() const;
  QPoly derivative() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// s, t with s*a + t*b = gcd(a, b) (monic).
struct Bezout {
  QPoly s, t, g;
};
Bezout extended_gcd(const QPoly& a, const QPoly& b);

/// Monic irreducible factors over Q with multiplicities; the product of
/// factor^multiplicity equals the monic version of f. Degree 0 input gives an empty list.
std::vector<std::pair<QPoly, int>> factor(const QPoly& f, std::uint64_t seed = 1);

}  // namespace biq::poly
