#pragma once

#include "biq/cmatrix.hpp"

#include <cstdint>
#include <random>

namespace biq {

/// Seeded generator. mt19937_64 output is fixed by the standard, and the
/// reductions below avoid implementation-defined distributions, so results are
/// reproducible across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi] (up to a negligible modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(int bound);
  GaussianRational gaussian(int bound);
  /// Gaussian integer with both parts in [-bound, bound].
  GaussianRational gaussian_integer(int bound);
  CMatrix matrix(std::size_t rows, std::size_t cols, int bound);
  /// Retries until invertible.
  CMatrix invertible_matrix(std::size_t n, int bound);

  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace biq
