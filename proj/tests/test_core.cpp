#include "biq/biquiver.hpp"
#include "biq/cmatrix.hpp"
#include "biq/error.hpp"
#include "biq/linalg.hpp"
#include "biq/poly.hpp"
#include "biq/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace biq;
using testing::gi;
using testing::make;

TEST_SUITE("core") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(4, 6)) == "2/3");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
  }

  TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(gi(1, 1).inverse() == GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK(gi(3, 4).norm() == 25);
    CHECK(gi(1, -1).conj() == gi(1, 1));
    // (1+i)^-1 * i * (1-i) = 1
    CHECK(gi(1, 1).inverse() * i * gi(1, -1) == GaussianRational(1));
    CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
  }

  TEST_CASE("matrix inverse, rank, kernel") {
    CMatrix m{{1, 2}, {3, gi(0, 1)}};
    CHECK(m * m.inverse() == CMatrix::identity(2));
    CHECK(m.determinant() == oracle::det(m));
    CMatrix s{{1, 2}, {2, 4}};
    CHECK(s.rank() == 1);
    CHECK_FALSE(s.is_invertible());
    CHECK_THROWS_AS(s.inverse(), SingularMatrixError);
    CMatrix k = s.kernel();
    CHECK(k.cols() == 1);
    CHECK((s * k).is_zero());
    CHECK(s.column_space().cols() == 1);
    CHECK(CMatrix(0, 0).inverse() == CMatrix(0, 0));
    CHECK(CMatrix(0, 0).is_invertible());
  }

  TEST_CASE("determinant agrees with the elimination oracle on random matrices") {
    Rng rng(5);
    for (int k = 0; k < 30; ++k) {
      CMatrix m = rng.matrix(3, 3, 4);
      CHECK(m.determinant() == oracle::det(m));
      CHECK(m.is_invertible() == !oracle::det(m).is_zero());
    }
  }

  TEST_CASE("rational nullspace basis is reduced at free positions") {
    QMatrix m(2, 4);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 2) = 1;
    m(1, 3) = -1;
    Nullspace ns = nullspace(m);
    REQUIRE(ns.basis.size() == 2);
    CHECK(rank(m) == 2);
    for (std::size_t j = 0; j < ns.basis.size(); ++j) {
      for (std::size_t r = 0; r < 2; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < 4; ++c)
          s += m(r, c) * ns.basis[j][c];
        CHECK(s == 0);
      }
      for (std::size_t l = 0; l < ns.free.size(); ++l)
        CHECK(ns.basis[j][ns.free[l]] == (j == l ? 1 : 0));
    }
    auto x = solve(m, {3, 5});
    REQUIRE(x);
    CHECK((*x)[0] + 2 * (*x)[1] == 3);
    CHECK((*x)[2] - (*x)[3] == 5);
    QMatrix z(1, 1);
    CHECK_FALSE(solve(z, {1}));
  }

  TEST_CASE("polynomial factorization over Q") {
    using poly::QPoly;
    auto p = [](std::vector<long> c) {
      std::vector<Rational> r(c.begin(), c.end());
      return QPoly(r);
    };
    // (x-1)(x-2)
    auto f = poly::factor(p({2, -3, 1}));
    CHECK(f.size() == 2);
    // x^4 + 1 is irreducible over Q
    CHECK(poly::factor(p({1, 0, 0, 0, 1})).size() == 1);
    // (x^2+1)^2 (x^2-2) (3x+1)
    QPoly g = p({1, 0, 1}) * p({1, 0, 1}) * p({-2, 0, 1}) * p({1, 3});
    auto fg = poly::factor(g);
    REQUIRE(fg.size() == 3);
    QPoly back({Rational(1)});
    for (const auto& [q, e] : fg)
      for (int k = 0; k < e; ++k)
        back = back * q;
    CHECK(back == g.monic());
    // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
    CHECK(poly::factor(p({1, 0, -10, 0, 1})).size() == 1);
    // (x^2 - 2)(x^2 - 3)
    CHECK(poly::factor(p({6, 0, -5, 0, 1})).size() == 2);
    auto bz = poly::extended_gcd(p({-1, 1}), p({-2, 1}));
    CHECK(bz.s * p({-1, 1}) + bz.t * p({-2, 1}) == p({1}));
  }

  TEST_CASE("parse_biquiver") {
    Biquiver g = parse_biquiver(R"({"vertices":2,"arrows":[{"id":"a","from":1,"to":2,"kind":"dashed"}]})");
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.arrow_count() == 1);
    CHECK(g.arrow(0).is_dashed());
    CHECK(g.arrow(0).from == 0);
    CHECK(g.arrow(0).to == 1);
    CHECK(parse_biquiver(serialize_biquiver(g)) == g);
    Biquiver one = parse_biquiver(R"({"vertices":1,"arrows":[]})");
    CHECK(one.vertex_count() == 1);
    CHECK(one.arrow_count() == 0);
    CHECK_THROWS_AS(parse_biquiver(R"({"vertices":2,"arrows":[{"id":"a","from":3,"to":1,"kind":"full"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_biquiver(R"({"vertices":2,"arrows":[{"id":"a","from":1,"to":2,"kind":"wavy"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_biquiver(R"({"vertices":2,"arrows":[)"), ParseError);
    CHECK_THROWS_AS(make(2, {{"a", 1, 2, 'f'}, {"a", 2, 1, 'f'}}), ValidationError);
  }

  TEST_CASE("underlying structure") {
    auto p = underlying_structure(make(3, {{"a", 1, 2, 'd'}, {"b", 2, 3, 'd'}}));
    CHECK(p.connected);
    CHECK(p.is_tree);
    CHECK(p.pendant_vertices == std::vector<Vertex>{0, 2});

    auto c = underlying_structure(make(2, {{"a", 1, 2, 'd'}, {"b", 2, 1, 'f'}}));
    CHECK_FALSE(c.is_tree);
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0].odd);
    CHECK(c.multiedges.at({0, 1}) == 2);

    auto l = underlying_structure(make(1, {{"a", 1, 1, 'f'}}));
    CHECK_FALSE(l.is_tree);
    CHECK(l.loops == std::vector<int>{1});

    Biquiver split = make(4, {{"a", 1, 2, 'f'}, {"b", 3, 3, 'd'}});
    CHECK_FALSE(is_connected(split));
    auto comps = connected_components(split);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].vertices == std::vector<Vertex>{0, 1});
    CHECK(degrees(split) == std::vector<int>{1, 1, 2, 0});
  }
}
