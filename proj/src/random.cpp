#include "biq/random.hpp"

#include <stdexcept>

namespace biq {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo)
    throw std::invalid_argument("empty sampling range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::rational(int bound) {
  std::int64_t p = uniform(-bound, bound);
  std::int64_t q = uniform(1, bound);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

GaussianRational Rng::gaussian(int bound) {
  Rational re = rational(bound);
  Rational im = rational(bound);
  return {re, im};
}

GaussianRational Rng::gaussian_integer(int bound) {
  auto re = uniform(-bound, bound);
  auto im = uniform(-bound, bound);
  return {Rational(static_cast<long>(re)), Rational(static_cast<long>(im))};
}

CMatrix Rng::matrix(std::size_t rows, std::size_t cols, int bound) {
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = gaussian(bound);
  return m;
}

CMatrix Rng::invertible_matrix(std::size_t n, int bound) {
  for (;;) {
    CMatrix m = matrix(n, n, bound);
    if (m.is_invertible())
      return m;
  }
}

}  // namespace biq
