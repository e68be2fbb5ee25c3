#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

Rational rdet(RMatrix m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

RMatrix principal(const RMatrix& q, unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (mask & (1u << i))
      idx.push_back(i);
  RMatrix out(idx.size(), std::vector<Rational>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      out[a][b] = q[idx[a]][idx[b]];
  return out;
}

bool is_scalar(const CMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!(m(r, c) == (r == c ? m(0, 0) : GaussianRational())))
        return false;
  return true;
}

GaussianRational trace(const CMatrix& m) {
  GaussianRational t;
  for (std::size_t k = 0; k < m.rows(); ++k)
    t += m(k, k);
  return t;
}

}  // namespace

RMatrix tits_gram(const biq::Biquiver& g) {
  const auto t = static_cast<std::size_t>(g.vertex_count());
  RMatrix q(t, std::vector<Rational>(t));
  for (std::size_t i = 0; i < t; ++i)
    q[i][i] = 1;
  const Rational half(1, 2);
  for (const auto& a : g.arrows()) {
    q[a.from][a.to] -= half;
    q[a.to][a.from] -= half;
  }
  return q;
}

std::string definiteness(const RMatrix& q) {
  const std::size_t n = q.size();
  bool pd = true;
  for (std::size_t k = 1; k <= n; ++k)
    if (rdet(principal(q, (1u << k) - 1)) <= 0)
      pd = false;
  if (pd)
    return "PositiveDefinite";
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    if (rdet(principal(q, mask)) < 0)
      return "Indefinite";
  return "PositiveSemidefinite";
}

long long tits_value(const biq::Biquiver& g, const std::vector<int>& z) {
  long long s = 0;
  for (int x : z)
    s += static_cast<long long>(x) * x;
  for (const auto& a : g.arrows())
    s -= static_cast<long long>(z[a.from]) * z[a.to];
  return s;
}

std::vector<std::vector<int>> brute_roots(const biq::Biquiver& g, long long value, int bound) {
  const auto t = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> out;
  std::vector<int> z(t, 0);
  for (;;) {
    bool nonzero = false;
    for (int x : z)
      nonzero = nonzero || x != 0;
    if (nonzero && tits_value(g, z) == value)
      out.push_back(z);
    std::size_t k = t;
    while (k > 0 && z[k - 1] == bound)
      z[--k] = 0;
    if (k == 0)
      break;
    ++z[k - 1];
  }
  return out;
}

GaussianRational det(CMatrix m) {
  const std::size_t n = m.rows();
  GaussianRational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero())
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k)
        std::swap(m(p, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      GaussianRational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k)
        m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

bool similar_small(const CMatrix& m, const CMatrix& n) {
  if (m.rows() != n.rows() || m.rows() > 2)
    throw std::invalid_argument("similar_small handles sizes 1 and 2");
  if (m.rows() <= 1)
    return m == n;
  return trace(m) == trace(n) && det(m) == det(n) && is_scalar(m) == is_scalar(n);
}

bool consimilarity_invariants_differ(const CMatrix& m, const CMatrix& n) {
  const CMatrix mm = m * m.conj();
  const CMatrix nn = n * n.conj();
  if (m.rank() != n.rank())
    return true;
  if (mm.rows() <= 2 && !similar_small(mm, nn))
    return true;
  return trace(mm) != trace(nn) || det(mm) != det(nn);
}

bool pair_invariants_differ(const CMatrix& p, const CMatrix& q, const CMatrix& p2, const CMatrix& q2) {
  return trace(p) != trace(p2) || trace(q) != trace(q2) || det(p) != det(p2) || det(q) != det(q2) ||
         trace(p * q) != trace(p2 * q2);
}

}  // namespace oracle
