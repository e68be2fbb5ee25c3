#include "biq/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace biq::poly {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0)
    c_.pop_back();
}

QPoly QPoly::monic() const {
  if (is_zero())
    return {};
  std::vector<Rational> v = c_;
  Rational inv = 1 / c_.back();
  for (auto& x : v)
    x *= inv;
  return QPoly(std::move(v));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1)
    return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    v[k - 1] = c_[k] * static_cast<long>(k);
  return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coeff(k) + b.coeff(k);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coeff(k) - b.coeff(k);
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  if (a.degree() < b.degree())
    return {QPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv = 1 / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0)
      continue;
    Rational f = r[k] * inv;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j)
      r[k - db + j] -= f * b.coeffs()[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0({Rational(1)}), s1;
  QPoly t0, t1({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero())
    return {};
  QPoly scale({1 / r0.leading()});
  return {s0 * scale, t0 * scale, r0.monic()};
}

namespace {

// ---- square-free decomposition (Yun) ----

std::vector<std::pair<QPoly, int>> square_free(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly fm = f.monic();
  QPoly d1 = fm.derivative();
  QPoly a = gcd(fm, d1);
  QPoly b = divmod(fm, a).first;
  QPoly c = divmod(d1, a).first;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly g = gcd(b, d);
    if (g.degree() > 0)
      out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

// ---- integer polynomials ----

using ZPoly = std::vector<Integer>;  // low degree first, no trailing zeros

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& x : p)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

// Primitive integer polynomial with positive leading coefficient, same roots as q.
ZPoly primitive_of(const QPoly& q) {
  Integer l = 1;
  for (const auto& x : q.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZPoly p;
  for (const auto& x : q.coeffs())
    p.push_back(x.get_num() * (l / x.get_den()));
  Integer g = content(p);
  if (sgn(p.back()) < 0)
    g = -g;
  for (auto& x : p)
    x /= g;
  return p;
}

QPoly to_q(const ZPoly& p) {
  std::vector<Rational> v;
  for (const auto& x : p)
    v.emplace_back(x);
  return QPoly(std::move(v));
}

// ---- polynomials over GF(P), P a large prime ----

struct Field {
  Integer p;

  Integer reduce(const Integer& x) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Integer inv(const Integer& x) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("non-invertible residue");
    return r;
  }

  ZPoly norm(ZPoly a) const {
    for (auto& x : a)
      x = reduce(x);
    trim(a);
    return a;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k)
      r[k] = (k < a.size() ? a[k] : Integer(0)) - (k < b.size() ? b[k] : Integer(0));
    return norm(std::move(r));
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty())
      return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a[i]) == 0)
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] += a[i] * b[j];
    }
    return norm(std::move(r));
  }
  std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) const {
    if (b.empty())
      throw std::domain_error("division by zero polynomial mod p");
    ZPoly r = a;
    if (deg(a) < deg(b))
      return {{}, r};
    ZPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1));
    Integer lead_inv = inv(b.back());
    const auto db = static_cast<std::size_t>(deg(b));
    for (std::size_t k = r.size(); k-- > db;) {
      r[k] = reduce(r[k]);
      if (sgn(r[k]) == 0)
        continue;
      Integer f = reduce(r[k] * lead_inv);
      q[k - db] = f;
      for (std::size_t j = 0; j <= db; ++j)
        r[k - db + j] -= f * b[j];
    }
    return {norm(std::move(q)), norm(std::move(r))};
  }
  ZPoly rem(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }
  ZPoly monic(ZPoly a) const {
    if (a.empty())
      return a;
    Integer li = inv(a.back());
    for (auto& x : a)
      x = reduce(x * li);
    return a;
  }
  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }
  ZPoly powmod(const ZPoly& base, const Integer& e, const ZPoly& m) const {
    ZPoly result{Integer(1)};
    result = rem(result, m);
    ZPoly b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t k = bits; k-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), k))
        result = rem(mul(result, b), m);
    }
    return result;
  }
};

// Cantor-Zassenhaus equal-degree splitting of a monic square-free g whose
// irreducible factors all have degree d.
void equal_degree(const Field& fp, const ZPoly& g, int d, gmp_randclass& rand, std::vector<ZPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), fp.p.get_mpz_t(), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  for (;;) {
    ZPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& x : a)
      x = rand.get_z_range(fp.p);
    trim(a);
    if (deg(a) < 1)
      continue;
    ZPoly b = fp.sub(fp.powmod(a, e, g), ZPoly{Integer(1)});
    ZPoly u = fp.gcd(g, b);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      equal_degree(fp, u, d, rand, out);
      equal_degree(fp, fp.divmod(g, u).first, d, rand, out);
      return;
    }
  }
}

std::vector<ZPoly> factor_mod_p(const Field& fp, const ZPoly& f, gmp_randclass& rand) {
  std::vector<ZPoly> out;
  ZPoly rest = fp.monic(fp.norm(f));
  const ZPoly x{Integer(0), Integer(1)};
  ZPoly h = x;
  for (int d = 1; 2 * d <= deg(rest); ++d) {
    h = fp.powmod(h, fp.p, rest);
    ZPoly g = fp.gcd(rest, fp.sub(h, x));
    if (deg(g) > 0) {
      equal_degree(fp, g, d, rand, out);
      rest = fp.divmod(rest, g).first;
      h = fp.rem(h, rest);
    }
  }
  if (deg(rest) > 0)
    out.push_back(rest);
  return out;
}

// Exact quotient f / g in Z[x] if g divides f, else nothing.
std::optional<ZPoly> exact_divide(const ZPoly& f, const ZPoly& g) {
  auto [q, r] = divmod(to_q(f), to_q(g));
  if (!r.is_zero())
    return std::nullopt;
  ZPoly out;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1)
      return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

// Irreducible factors over Z of a primitive square-free f with positive leading
// coefficient: factor modulo one prime above twice the Mignotte-type bound, then
// recombine modular factors (Zassenhaus).
std::vector<ZPoly> factor_square_free(ZPoly f, std::uint64_t seed) {
  if (deg(f) <= 1)
    return {f};
  const int n = deg(f);
  Integer norm1 = 0;
  for (const auto& c : f)
    norm1 += abs(c);
  Integer bound = norm1 * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));

  Field fp;
  mpz_nextprime(fp.p.get_mpz_t(), Integer(2 * bound + 1).get_mpz_t());
  for (;;) {
    ZPoly fm = fp.norm(f);
    ZPoly deriv;
    for (std::size_t k = 1; k < fm.size(); ++k)
      deriv.push_back(fm[k] * static_cast<long>(k));
    deriv = fp.norm(deriv);
    if (deg(fm) == n && deg(fp.gcd(fm, deriv)) == 0)
      break;
    mpz_nextprime(fp.p.get_mpz_t(), fp.p.get_mpz_t());
  }

  gmp_randclass rand(gmp_randinit_default);
  rand.seed(static_cast<unsigned long>(seed));
  std::vector<ZPoly> modular = factor_mod_p(fp, f, rand);

  std::vector<ZPoly> found;
  const Integer half = fp.p / 2;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t k = 0; k < s; ++k)
      pick[k] = k;
    for (;;) {
      ZPoly g{fp.reduce(f.back())};
      for (std::size_t k : pick)
        g = fp.mul(g, modular[k]);
      for (auto& c : g)
        if (c > half)
          c -= fp.p;
      trim(g);
      Integer cont = content(g);
      for (auto& c : g)
        c /= cont;
      if (sgn(g.back()) < 0)
        for (auto& c : g)
          c = -c;
      if (auto q = exact_divide(f, g)) {
        found.push_back(g);
        f = *q;
        std::vector<ZPoly> remaining;
        for (std::size_t k = 0; k < modular.size(); ++k)
          if (std::find(pick.begin(), pick.end(), k) == pick.end())
            remaining.push_back(modular[k]);
        modular = std::move(remaining);
        hit = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == modular.size() - s + i - 1)
        --i;
      if (i == 0)
        break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j)
        pick[j] = pick[j - 1] + 1;
    }
    if (!hit)
      ++s;
  }
  if (deg(f) > 0)
    found.push_back(f);
  return found;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor(const QPoly& f, std::uint64_t seed) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() <= 0)
    return out;
  for (const auto& [part, mult] : square_free(f))
    for (const auto& z : factor_square_free(primitive_of(part), seed))
      out.emplace_back(to_q(z).monic(), mult);
  return out;
}

}  // namespace biq::poly
