#include "biq/roots.hpp"

#include "biq/classifier.hpp"
#include "biq/error.hpp"
#include "biq/tits.hpp"

#include <limits>

namespace biq::roots {

namespace {

using Form = std::vector<std::vector<Rational>>;

// infimum[k] is the quadratic form in z_0..z_{k-1} equal to the infimum of q over
// real z_k..z_{t-1}, or nullopt when that infimum is -infinity.
std::vector<std::optional<Form>> infimum_forms(const tits::TitsGram& q) {
  const auto t = static_cast<std::size_t>(q.size());
  std::vector<std::optional<Form>> out(t + 1);
  Form f(t, std::vector<Rational>(t));
  for (std::size_t u = 0; u < t; ++u)
    for (std::size_t v = 0; v < t; ++v)
      f[u][v] = q(static_cast<int>(u), static_cast<int>(v));
  out[t] = f;
  for (std::size_t j = t; j-- > 0;) {
    const Rational a = f[j][j];
    Form next(j, std::vector<Rational>(j));
    if (sgn(a) > 0) {
      for (std::size_t u = 0; u < j; ++u)
        for (std::size_t v = 0; v < j; ++v)
          next[u][v] = f[u][v] - f[u][j] * f[j][v] / a;
    } else if (sgn(a) == 0) {
      for (std::size_t u = 0; u < j; ++u)
        if (sgn(f[j][u]) != 0)
          return out;  // linear in z_j with nonzero slope: unbounded below
      for (std::size_t u = 0; u < j; ++u)
        for (std::size_t v = 0; v < j; ++v)
          next[u][v] = f[u][v];
    } else {
      return out;
    }
    f = std::move(next);
    out[j] = f;
  }
  return out;
}

struct Quadratic {
  Rational a, b, c;  // a x^2 + b x + c
  Rational at(std::int64_t x) const { return (a * x + b) * x + c; }
};

// Restriction of form f (size k+1) to z_k = x, with z_0..z_{k-1} fixed.
Quadratic restrict(const Form& f, const std::vector<int>& z, std::size_t k) {
  Quadratic out;
  out.a = f[k][k];
  for (std::size_t i = 0; i < k; ++i) {
    if (z[i] == 0)
      continue;
    out.b += 2 * f[k][i] * z[i];
    for (std::size_t j = 0; j < k; ++j)
      if (z[j] != 0)
        out.c += f[i][j] * z[i] * z[j];
  }
  return out;
}

// Integers x with p(x) <= 0 for p convex (a > 0), as [lo, hi]; empty if lo > hi.
std::pair<std::int64_t, std::int64_t> convex_sublevel(const Quadratic& p) {
  Rational vertex = -p.b / (2 * p.a);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), vertex.get_num_mpz_t(), vertex.get_den_mpz_t());
  if (!fl.fits_slong_p())
    throw std::overflow_error("root search interval out of range");
  std::int64_t m = fl.get_si();
  std::int64_t start;
  if (sgn(p.at(m)) <= 0)
    start = m;
  else if (sgn(p.at(m + 1)) <= 0)
    start = m + 1;
  else
    return {1, 0};
  auto edge = [&](std::int64_t dir) {
    std::int64_t good = start;
    std::int64_t step = 1;
    while (sgn(p.at(good + dir * step)) <= 0) {
      good += dir * step;
      step *= 2;
    }
    // p(good) <= 0 < p(good + dir*step): binary search between
    std::int64_t bad = good + dir * step;
    while ((bad - good) * dir > 1) {
      std::int64_t mid = good + (bad - good) / 2;
      if (sgn(p.at(mid)) <= 0)
        good = mid;
      else
        bad = mid;
    }
    return good;
  };
  return {edge(-1), edge(1)};
}

struct Search {
  const tits::TitsGram& gram;
  const std::vector<std::optional<Form>>& inf;
  Rational value;
  std::optional<int> cap;
  std::vector<int> z;
  std::vector<DimensionVector> out;

  void run(std::size_t k) {
    const std::size_t t = z.size();
    std::int64_t lo = 0;
    std::int64_t hi = cap ? *cap : std::numeric_limits<std::int64_t>::max();
    std::optional<Quadratic> constraint;
    if (inf[k + 1]) {
      constraint = restrict(*inf[k + 1], z, k);
      Quadratic shifted = *constraint;
      shifted.c -= value;
      if (sgn(shifted.a) > 0) {
        auto [l, h] = convex_sublevel(shifted);
        lo = std::max(lo, l);
        hi = std::min(hi, h);
      }
    }
    if (hi == std::numeric_limits<std::int64_t>::max())
      throw PreconditionError("root set is not finite here; an explicit bound is required");
    for (std::int64_t x = lo; x <= hi; ++x) {
      z[k] = static_cast<int>(x);
      if (constraint && constraint->at(x) > value)
        continue;
      if (k + 1 == t) {
        bool nonzero = false;
        for (int c : z)
          nonzero |= c != 0;
        if (nonzero && tits::evaluate(gram, z) == value)
          out.push_back(z);
      } else {
        run(k + 1);
      }
    }
    z[k] = 0;
  }
};

}  // namespace

std::vector<DimensionVector> roots_with_value(const Biquiver& g, std::int64_t value, std::optional<int> bound) {
  if (!is_connected(g))
    throw PreconditionError("biquiver is not connected");
  if (bound && *bound < 1)
    throw PreconditionError("bound must be positive");
  auto gram = tits::gram_matrix(g);
  if (tits::definiteness(gram) == tits::Definiteness::PositiveDefinite)
    bound.reset();
  else if (!bound)
    throw PreconditionError("the Tits form is not positive definite; an explicit bound is required");
  auto inf = infimum_forms(gram);
  Search s{gram, inf, Rational(static_cast<long>(value)), bound, DimensionVector(static_cast<std::size_t>(g.vertex_count()), 0), {}};
  s.run(0);
  return s.out;
}

std::size_t positive_root_count(const Biquiver& g) {
  auto type = classify::representation_type(g);
  if (type.kind != classify::Kind::Finite)
    throw PreconditionError("positive root count requires a representation-finite biquiver");
  return roots_with_value(g, 1).size();
}

}  // namespace biq::roots
