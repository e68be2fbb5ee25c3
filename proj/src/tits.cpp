#include "biq/tits.hpp"

#include "biq/error.hpp"

#include <optional>
#include <stdexcept>

namespace biq::tits {

TitsGram::TitsGram(int t, std::vector<Rational> entries) : t_(t), q_(std::move(entries)) {
  if (t_ < 0 || q_.size() != static_cast<std::size_t>(t_) * static_cast<std::size_t>(t_))
    throw ValidationError("Gram matrix entry count does not match its size");
}

bool TitsGram::is_symmetric() const {
  for (int u = 0; u < t_; ++u)
    for (int v = u + 1; v < t_; ++v)
      if ((*this)(u, v) != (*this)(v, u))
        return false;
  return true;
}

QMatrix TitsGram::as_matrix() const {
  QMatrix m(static_cast<std::size_t>(t_), static_cast<std::size_t>(t_));
  for (int u = 0; u < t_; ++u)
    for (int v = 0; v < t_; ++v)
      m(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = (*this)(u, v);
  return m;
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite:
      return "PositiveDefinite";
    case Definiteness::PositiveSemidefinite:
      return "PositiveSemidefinite";
    case Definiteness::Indefinite:
      return "Indefinite";
  }
  return "";
}

TitsGram gram_matrix(const Biquiver& g) {
  const int t = g.vertex_count();
  std::vector<Rational> q(static_cast<std::size_t>(t * t));
  for (int u = 0; u < t; ++u)
    q[static_cast<std::size_t>(u * t + u)] = 1;
  const Rational half(1, 2);
  for (const auto& a : g.arrows()) {
    if (a.is_loop()) {
      q[static_cast<std::size_t>(a.from * t + a.from)] -= 1;
    } else {
      q[static_cast<std::size_t>(a.from * t + a.to)] -= half;
      q[static_cast<std::size_t>(a.to * t + a.from)] -= half;
    }
  }
  return {t, std::move(q)};
}

std::int64_t evaluate(const Biquiver& g, const DimensionVector& z) {
  if (z.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ValidationError("dimension vector length " + std::to_string(z.size()) + " does not match " +
                          std::to_string(g.vertex_count()) + " vertices");
  std::int64_t value = 0;
  for (int x : z)
    value += static_cast<std::int64_t>(x) * x;
  for (const auto& a : g.arrows())
    value -= static_cast<std::int64_t>(z[a.from]) * z[a.to];
  return value;
}

Rational evaluate(const TitsGram& q, const DimensionVector& z) {
  if (z.size() != static_cast<std::size_t>(q.size()))
    throw ValidationError("dimension vector length does not match the Gram matrix");
  Rational value;
  for (int u = 0; u < q.size(); ++u)
    for (int v = 0; v < q.size(); ++v)
      value += q(u, v) * z[u] * z[v];
  return value;
}

namespace {

// Faddeev-LeVerrier: M_0 = 0, c_0 = 1; M_k = A M_{k-1} + c_{k-1} I; c_k = -tr(A M_k)/k.
std::vector<Rational> faddeev_leverrier(const TitsGram& a) {
  const std::size_t n = static_cast<std::size_t>(a.size());
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  std::vector<Rational> m(n * n);
  std::vector<Rational> next(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational& s = next[i * n + j];
        s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(m[l * n + j]) != 0)
            s += a(static_cast<int>(i), static_cast<int>(l)) * m[l * n + j];
        if (i == j)
          s += c[k - 1];
      }
    std::swap(m, next);
    Rational trace;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        trace += a(static_cast<int>(i), static_cast<int>(l)) * m[l * n + i];
    c[k] = -trace / static_cast<long>(k);
  }
  return c;
}

using Wide = __int128;

bool mul_ok(Wide x, Wide y, Wide& out) { return !__builtin_mul_overflow(x, y, &out); }
bool add_ok(Wide x, Wide y, Wide& out) { return !__builtin_add_overflow(x, y, &out); }

// The same recurrence on the integer matrix 2Q, whose characteristic polynomial
// has coefficients 2^k c_k (identical signs). Returns nullopt on overflow or when
// 2Q is not integral.
std::optional<std::vector<Wide>> faddeev_leverrier_doubled(const TitsGram& a) {
  const std::size_t n = static_cast<std::size_t>(a.size());
  std::vector<Wide> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational twice = a(static_cast<int>(i), static_cast<int>(j)) * 2;
      if (twice.get_den() != 1 || !twice.get_num().fits_slong_p())
        return std::nullopt;
      b[i * n + j] = twice.get_num().get_si();
    }
  std::vector<Wide> c(n + 1);
  c[0] = 1;
  std::vector<Wide> m(n * n, 0);
  std::vector<Wide> next(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Wide s = (i == j) ? c[k - 1] : 0;
        for (std::size_t l = 0; l < n; ++l) {
          Wide p;
          if (!mul_ok(b[i * n + l], m[l * n + j], p) || !add_ok(s, p, s))
            return std::nullopt;
        }
        next[i * n + j] = s;
      }
    std::swap(m, next);
    Wide trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        Wide p;
        if (!mul_ok(b[i * n + l], m[l * n + i], p) || !add_ok(trace, p, trace))
          return std::nullopt;
      }
    if (trace % static_cast<Wide>(k) != 0)
      throw std::logic_error("non-integral Faddeev-LeVerrier step on an integer matrix");
    c[k] = -trace / static_cast<Wide>(k);
  }
  return c;
}

template <class Coeff, class SignOf>
Definiteness verdict_from(const std::vector<Coeff>& c, SignOf sign_of) {
  // det(lambda I - Q) = lambda^t - e_1 lambda^(t-1) + e_2 lambda^(t-2) - ..., e_k = (-1)^k c_k.
  const std::size_t n = c.size() - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    int s = sign_of(c[k]) * (k % 2 == 0 ? 1 : -1);
    if (s < 0)
      return Definiteness::Indefinite;
  }
  int last = n == 0 ? 1 : sign_of(c[n]) * (n % 2 == 0 ? 1 : -1);
  return last > 0 ? Definiteness::PositiveDefinite : Definiteness::PositiveSemidefinite;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const TitsGram& q) { return faddeev_leverrier(q); }

Definiteness definiteness(const TitsGram& q) {
  if (!q.is_symmetric())
    throw ValidationError("Gram matrix is not symmetric");
  if (auto doubled = faddeev_leverrier_doubled(q))
    return verdict_from(*doubled, [](Wide x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); });
  return verdict_from(faddeev_leverrier(q), [](const Rational& x) { return sgn(x); });
}

std::optional<DimensionVector> radical_vector(const TitsGram& q) {
  if (definiteness(q) != Definiteness::PositiveSemidefinite)
    return std::nullopt;
  Nullspace ns = nullspace(q.as_matrix());
  if (ns.basis.size() != 1)
    return std::nullopt;
  const QVector& v = ns.basis.front();
  Integer lcm = 1;
  for (const auto& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  int sign = 0;
  for (const auto& n : ints)
    if (sgn(n) != 0) {
      sign = sgn(n);
      break;
    }
  DimensionVector out;
  for (auto& n : ints) {
    n = n / g * sign;
    if (sgn(n) < 0)
      return std::nullopt;
    if (!n.fits_sint_p())
      return std::nullopt;
    out.push_back(static_cast<int>(n.get_si()));
  }
  return out;
}

}  // namespace biq::tits
