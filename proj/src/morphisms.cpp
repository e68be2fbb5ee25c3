#include "biq/morphisms.hpp"

#include "biq/error.hpp"
#include "biq/poly.hpp"
#include "biq/random.hpp"

#include <stdexcept>

namespace biq {

namespace {

void require_same_biquiver(const MatrixRepresentation& a, const MatrixRepresentation& b) {
  if (!(a.biquiver() == b.biquiver()))
    throw ValidationError("representations live on different biquivers");
}

std::vector<std::size_t> block_offsets(const DimensionVector& source, const DimensionVector& target) {
  std::vector<std::size_t> off(source.size() + 1, 0);
  for (std::size_t v = 0; v < source.size(); ++v)
    off[v + 1] = off[v] + 2 * static_cast<std::size_t>(source[v]) * static_cast<std::size_t>(target[v]);
  return off;
}

MorphismTuple identity_tuple(const DimensionVector& dims) { return identity_base_change(dims); }

}  // namespace

bool is_morphism(const MatrixRepresentation& a, const MatrixRepresentation& b, std::span<const CMatrix> f) {
  const Biquiver& g = a.biquiver();
  if (!(g == b.biquiver()) || f.size() != static_cast<std::size_t>(g.vertex_count()))
    return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (f[v].rows() != static_cast<std::size_t>(b.dim(v)) || f[v].cols() != static_cast<std::size_t>(a.dim(v)))
      return false;
  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    const Arrow& arr = g.arrow(k);
    const CMatrix& fv = arr.is_dashed() ? f[arr.to].conj() : f[arr.to];
    if (!(b.matrix(k) * f[arr.from] == fv * a.matrix(k)))
      return false;
  }
  return true;
}

MorphismBasis::MorphismBasis(Biquiver g, DimensionVector source, DimensionVector target,
                             std::vector<MorphismTuple> basis, std::vector<std::size_t> free)
    : graph_(std::move(g)),
      source_(std::move(source)),
      target_(std::move(target)),
      basis_(std::move(basis)),
      free_(std::move(free)),
      offsets_(block_offsets(source_, target_)) {}

QVector MorphismBasis::coordinates(std::span<const CMatrix> f) const {
  QVector out;
  out.reserve(free_.size());
  std::size_t v = 0;
  for (std::size_t p : free_) {
    while (offsets_[v + 1] <= p)
      ++v;
    const std::size_t local = p - offsets_[v];
    const std::size_t entry = local / 2;
    const auto cols = static_cast<std::size_t>(source_[v]);
    const GaussianRational& z = f[v](entry / cols, entry % cols);
    out.push_back(local % 2 == 0 ? z.re() : z.im());
  }
  return out;
}

MorphismTuple MorphismBasis::zero() const {
  MorphismTuple out;
  for (std::size_t v = 0; v < source_.size(); ++v)
    out.emplace_back(static_cast<std::size_t>(target_[v]), static_cast<std::size_t>(source_[v]));
  return out;
}

MorphismTuple MorphismBasis::combination(std::span<const Rational> coeffs) const {
  if (coeffs.size() != basis_.size())
    throw ValidationError("coefficient count does not match Hom dimension");
  MorphismTuple out = zero();
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (sgn(coeffs[j]) == 0)
      continue;
    const GaussianRational c(coeffs[j]);
    for (std::size_t v = 0; v < out.size(); ++v)
      out[v] += c * basis_[j][v];
  }
  return out;
}

MorphismBasis hom_basis(const MatrixRepresentation& a, const MatrixRepresentation& b) {
  require_same_biquiver(a, b);
  const Biquiver& g = a.biquiver();
  const auto off = block_offsets(a.dims(), b.dims());
  auto var = [&](Vertex v, std::size_t r, std::size_t c) {
    return off[v] + 2 * (r * static_cast<std::size_t>(a.dim(v)) + c);
  };

  std::size_t rows = 0;
  for (const auto& arr : g.arrows())
    rows += 2 * static_cast<std::size_t>(b.dim(arr.to)) * static_cast<std::size_t>(a.dim(arr.from));
  QMatrix m(rows, off.back());

  std::size_t row = 0;
  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    const Arrow& arr = g.arrow(k);
    const CMatrix& am = a.matrix(k);
    const CMatrix& bm = b.matrix(k);
    const Vertex u = arr.from;
    const Vertex v = arr.to;
    for (std::size_t r = 0; r < static_cast<std::size_t>(b.dim(v)); ++r) {
      for (std::size_t c = 0; c < static_cast<std::size_t>(a.dim(u)); ++c, row += 2) {
        // B F_u
        for (std::size_t t = 0; t < static_cast<std::size_t>(b.dim(u)); ++t) {
          const GaussianRational& z = bm(r, t);
          const std::size_t x = var(u, t, c);
          m(row, x) += z.re();
          m(row, x + 1) -= z.im();
          m(row + 1, x) += z.im();
          m(row + 1, x + 1) += z.re();
        }
        // - F_v A  or  - conj(F_v) A
        for (std::size_t t = 0; t < static_cast<std::size_t>(a.dim(v)); ++t) {
          const GaussianRational& z = am(t, c);
          const std::size_t x = var(v, r, t);
          m(row, x) -= z.re();
          m(row + 1, x) -= z.im();
          if (arr.is_dashed()) {
            m(row, x + 1) -= z.im();
            m(row + 1, x + 1) += z.re();
          } else {
            m(row, x + 1) += z.im();
            m(row + 1, x + 1) -= z.re();
          }
        }
      }
    }
  }

  Nullspace ns = nullspace(m);
  std::vector<MorphismTuple> basis;
  basis.reserve(ns.basis.size());
  for (const auto& vec : ns.basis) {
    MorphismTuple f;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto rs = static_cast<std::size_t>(b.dim(v));
      const auto cs = static_cast<std::size_t>(a.dim(v));
      CMatrix fv(rs, cs);
      for (std::size_t r = 0; r < rs; ++r)
        for (std::size_t c = 0; c < cs; ++c) {
          const std::size_t x = var(v, r, c);
          fv(r, c) = GaussianRational(vec[x], vec[x + 1]);
        }
      f.push_back(std::move(fv));
    }
    basis.push_back(std::move(f));
  }
  return {g, a.dims(), b.dims(), std::move(basis), std::move(ns.free)};
}

MorphismTuple compose(std::span<const CMatrix> f, std::span<const CMatrix> g) {
  if (f.size() != g.size())
    throw ValidationError("morphism tuples of different length");
  MorphismTuple out;
  out.reserve(f.size());
  for (std::size_t v = 0; v < f.size(); ++v)
    out.push_back(f[v] * g[v]);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "Yes";
    case Verdict::No:
      return "No";
    case Verdict::ProbablyNo:
      return "ProbablyNo";
  }
  return "?";
}

std::string to_string(LeafStatus s) {
  return s == LeafStatus::CertifiedIndecomposable ? "CertifiedIndecomposable" : "ProbablyIndecomposable";
}

bool verify_isomorphism(const MatrixRepresentation& a, const MatrixRepresentation& b, std::span<const CMatrix> s) {
  if (!(a.biquiver() == b.biquiver()) || a.dims() != b.dims())
    return false;
  try {
    return apply_base_change(a, s) == b;
  } catch (const ValidationError&) {
    return false;
  }
}

IsoResult are_isomorphic(const MatrixRepresentation& a, const MatrixRepresentation& b, const SearchOptions& options) {
  require_same_biquiver(a, b);
  IsoResult res;
  res.trials = options.trials;
  res.coeff_bound = options.coeff_bound;
  res.failure_bound = 0;
  if (a.dims() != b.dims()) {
    res.reason = "dimension vectors differ";
    return res;
  }
  if (a.total_dimension() == 0) {
    res.verdict = Verdict::Yes;
    res.certificate = identity_base_change(a.dims());
    res.reason = "zero representations";
    return res;
  }
  MorphismBasis hom = hom_basis(a, b);
  res.hom_dimension = hom.dimension();
  if (hom.dimension() == 0) {
    res.reason = "Hom(A,B) = 0";
    return res;
  }
  // Isomorphic representations have End(A), Hom(A,B) and End(B) of equal dimension.
  const std::size_t end_a = hom_basis(a, a).dimension();
  if (end_a != hom.dimension()) {
    res.reason = "dim Hom(A,B) = " + std::to_string(hom.dimension()) + " but dim End(A) = " + std::to_string(end_a);
    return res;
  }
  const std::size_t end_b = hom_basis(b, b).dimension();
  if (end_b != hom.dimension()) {
    res.reason = "dim Hom(A,B) = " + std::to_string(hom.dimension()) + " but dim End(B) = " + std::to_string(end_b);
    return res;
  }

  Rng rng(options.seed);
  QVector coeffs(hom.dimension());
  for (int trial = 0; trial < options.trials; ++trial) {
    for (auto& c : coeffs)
      c = Rational(static_cast<long>(rng.uniform(-options.coeff_bound, options.coeff_bound)));
    MorphismTuple f = hom.combination(coeffs);
    bool invertible = true;
    for (const auto& fv : f)
      if (!fv.is_invertible()) {
        invertible = false;
        break;
      }
    if (!invertible)
      continue;
    BaseChange s;
    for (const auto& fv : f)
      s.push_back(fv.inverse());
    if (!verify_isomorphism(a, b, s))
      throw std::logic_error("invertible morphism failed to verify as an isomorphism");
    res.verdict = Verdict::Yes;
    res.certificate = std::move(s);
    res.reason = "invertible morphism found at trial " + std::to_string(trial + 1);
    return res;
  }

  // prod_v det F_v is a nonzero polynomial of degree sum_v d_v in the coefficients
  // whenever an isomorphism exists.
  res.verdict = Verdict::ProbablyNo;
  res.reason = "no invertible morphism in " + std::to_string(options.trials) + " random trials";
  Rational ratio(a.total_dimension(), 2 * static_cast<long>(options.coeff_bound) + 1);
  ratio.canonicalize();
  if (ratio > 1)
    ratio = 1;
  Rational bound = 1;
  for (int t = 0; t < options.trials; ++t)
    bound *= ratio;
  res.failure_bound = bound;
  return res;
}

EndAlgebra end_algebra(const MatrixRepresentation& a) {
  EndAlgebra out;
  out.basis = hom_basis(a, a);
  const auto& b = out.basis.basis();
  out.structure.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out.structure[i].push_back(out.basis.coordinates(compose(b[i], b[j])));
  out.identity = out.basis.coordinates(identity_tuple(a.dims()));
  return out;
}

namespace {

// 2 Re tr(xy) summed over vertices: the trace of xy acting on the realified space.
Rational real_trace(const MorphismTuple& x, const MorphismTuple& y) {
  GaussianRational acc;
  for (std::size_t v = 0; v < x.size(); ++v) {
    const std::size_t n = x[v].rows();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        acc.add_product(x[v](r, c), y[v](c, r));
  }
  return 2 * acc.re();
}

bool certified_leaf(const MatrixRepresentation& a, const MorphismBasis& end) {
  const auto& b = end.basis();
  const std::size_t m = b.size();
  if (m == 1)
    return true;
  QMatrix form(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      form(i, j) = real_trace(b[i], b[j]);
      form(j, i) = form(i, j);
    }
  Nullspace rad = nullspace(form);
  const std::size_t r = m - rad.basis.size();
  if (r == 1)
    return true;
  if (r != 2)
    return false;

  // End/rad is 2-dimensional: R x R or C. Pick b_j independent of 1 modulo rad and
  // read off its quadratic relation b^2 = alpha b + beta 1 (mod rad).
  const QVector one = end.coordinates(identity_tuple(a.dims()));
  std::vector<QVector> cols = rad.basis;
  cols.push_back(one);
  const std::size_t base_rank = rank(QMatrix::from_columns(cols, m));
  for (std::size_t j = 0; j < m; ++j) {
    QVector ej(m);
    ej[j] = 1;
    std::vector<QVector> trial{ej, one};
    trial.insert(trial.end(), rad.basis.begin(), rad.basis.end());
    if (rank(QMatrix::from_columns(trial, m)) != base_rank + 1)
      continue;
    auto sol = solve(QMatrix::from_columns(trial, m), end.coordinates(compose(b[j], b[j])));
    if (!sol)
      throw std::logic_error("endomorphism algebra is not closed under composition");
    const Rational& alpha = (*sol)[0];
    const Rational& beta = (*sol)[1];
    return alpha * alpha + 4 * beta < 0;
  }
  throw std::logic_error("no element outside the radical");
}

MorphismTuple evaluate(const poly::QPoly& p, const MorphismTuple& phi, const DimensionVector& dims) {
  const MorphismTuple id = identity_tuple(dims);
  MorphismTuple acc(phi.size());
  for (std::size_t v = 0; v < phi.size(); ++v)
    acc[v] = CMatrix(phi[v].rows(), phi[v].cols());
  for (int k = p.degree(); k >= 0; --k) {
    acc = compose(acc, phi);
    const GaussianRational c(p.coeff(static_cast<std::size_t>(k)));
    for (std::size_t v = 0; v < acc.size(); ++v)
      acc[v] += c * id[v];
  }
  return acc;
}

poly::QPoly minimal_polynomial(const MorphismBasis& end, const MorphismTuple& phi, const DimensionVector& dims) {
  std::vector<QVector> powers;
  MorphismTuple cur = identity_tuple(dims);
  const std::size_t m = end.dimension();
  for (;;) {
    QVector w = end.coordinates(cur);
    if (!powers.empty()) {
      if (auto sol = solve(QMatrix::from_columns(powers, m), w)) {
        std::vector<Rational> c(powers.size() + 1);
        for (std::size_t k = 0; k < powers.size(); ++k)
          c[k] = -(*sol)[k];
        c.back() = 1;
        return poly::QPoly(std::move(c));
      }
    }
    powers.push_back(std::move(w));
    cur = compose(cur, phi);
  }
}

// A nontrivial idempotent polynomial in phi, if its minimal polynomial has two
// coprime factors over Q.
std::optional<MorphismTuple> splitting_idempotent(const MorphismBasis& end, const MorphismTuple& phi,
                                                  const DimensionVector& dims, std::uint64_t seed) {
  const poly::QPoly mp = minimal_polynomial(end, phi, dims);
  if (mp.degree() < 2)
    return std::nullopt;
  const auto factors = poly::factor(mp, seed);
  if (factors.size() < 2)
    return std::nullopt;
  poly::QPoly m1({Rational(1)});
  for (int k = 0; k < factors.front().second; ++k)
    m1 = m1 * factors.front().first;
  auto [m2, rem] = poly::divmod(mp, m1);
  if (!rem.is_zero())
    throw std::logic_error("factorization does not divide the minimal polynomial");
  const poly::Bezout bz = poly::extended_gcd(m1, m2);
  return evaluate(bz.s * m1, phi, dims);
}

struct Splitter {
  SearchOptions options;
  Rng rng;
  Decomposition out;

  // Appends the summands of a to out and returns S with apply_base_change(a, S)
  // equal to their direct sum.
  BaseChange run(const MatrixRepresentation& a) {
    if (a.total_dimension() == 0)
      return identity_base_change(a.dims());
    const MorphismBasis end = hom_basis(a, a);
    if (certified_leaf(a, end)) {
      out.summands.push_back(a);
      out.leaf_status.push_back(LeafStatus::CertifiedIndecomposable);
      return identity_base_change(a.dims());
    }

    std::vector<MorphismTuple> candidates;
    QVector coeffs(end.dimension());
    for (int t = 0; t < options.trials; ++t) {
      for (auto& c : coeffs)
        c = Rational(static_cast<long>(rng.uniform(-options.coeff_bound, options.coeff_bound)));
      candidates.push_back(end.combination(coeffs));
    }
    candidates.insert(candidates.end(), end.basis().begin(), end.basis().end());

    for (const auto& phi : candidates) {
      auto e = splitting_idempotent(end, phi, a.dims(), rng.next());
      if (e)
        return split(a, *e);
    }
    out.summands.push_back(a);
    out.leaf_status.push_back(LeafStatus::ProbablyIndecomposable);
    return identity_base_change(a.dims());
  }

  BaseChange split(const MatrixRepresentation& a, const MorphismTuple& e) {
    const Biquiver& g = a.biquiver();
    BaseChange t;
    DimensionVector dx, dy;
    for (std::size_t v = 0; v < e.size(); ++v) {
      CMatrix image = e[v].column_space();
      CMatrix kernel = e[v].kernel();
      dx.push_back(static_cast<int>(image.cols()));
      dy.push_back(static_cast<int>(kernel.cols()));
      t.push_back(hconcat(image, kernel));
    }
    const MatrixRepresentation b = apply_base_change(a, t);
    std::vector<CMatrix> mx, my;
    for (std::size_t k = 0; k < g.arrow_count(); ++k) {
      const Arrow& arr = g.arrow(k);
      const auto xu = static_cast<std::size_t>(dx[arr.from]);
      const auto xv = static_cast<std::size_t>(dx[arr.to]);
      const auto yu = static_cast<std::size_t>(dy[arr.from]);
      const auto yv = static_cast<std::size_t>(dy[arr.to]);
      const CMatrix& bm = b.matrix(k);
      if (!bm.block(0, xu, xv, yu).is_zero() || !bm.block(xv, 0, yv, xu).is_zero())
        throw std::logic_error("idempotent splitting left off-diagonal blocks");
      mx.push_back(bm.block(0, 0, xv, xu));
      my.push_back(bm.block(xv, xu, yv, yu));
    }
    const BaseChange sx = run(MatrixRepresentation(g, dx, std::move(mx)));
    const BaseChange sy = run(MatrixRepresentation(g, dy, std::move(my)));
    return compose_base_change(t, block_diagonal(sx, sy));
  }
};

}  // namespace

bool certified_indecomposable(const MatrixRepresentation& a) {
  if (a.total_dimension() == 0)
    return false;
  return certified_leaf(a, hom_basis(a, a));
}

Decomposition decompose(const MatrixRepresentation& a, const SearchOptions& options) {
  Splitter s{options, Rng(options.seed), {}};
  s.out.certificate = s.run(a);
  return std::move(s.out);
}

bool verify_decomposition(const MatrixRepresentation& a, const Decomposition& d) {
  if (d.leaf_status.size() != d.summands.size())
    return false;
  try {
    return apply_base_change(a, d.certificate) == direct_sum(a.biquiver(), d.summands);
  } catch (const ValidationError&) {
    return false;
  }
}

std::optional<std::vector<SummandMatch>> krull_schmidt_compare(std::span<const MatrixRepresentation> x,
                                                               std::span<const MatrixRepresentation> y,
                                                               const SearchOptions& options) {
  if (x.size() != y.size())
    return std::nullopt;
  std::vector<bool> used(y.size(), false);
  std::vector<SummandMatch> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < y.size() && !matched; ++j) {
      if (used[j] || x[i].dims() != y[j].dims() || !(x[i].biquiver() == y[j].biquiver()))
        continue;
      SearchOptions o = options;
      o.seed = options.seed + 7919 * i + j;
      IsoResult r = are_isomorphic(x[i], y[j], o);
      if (r.verdict != Verdict::Yes)
        continue;
      used[j] = true;
      matched = true;
      out.push_back({i, j, std::move(r.certificate)});
    }
    if (!matched)
      return std::nullopt;
  }
  return out;
}

}  // namespace biq
