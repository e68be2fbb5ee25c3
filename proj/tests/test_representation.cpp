#include "biq/conjugation.hpp"
#include "biq/error.hpp"
#include "biq/gadgets.hpp"
#include "biq/io.hpp"
#include "biq/morphisms.hpp"
#include "biq/random.hpp"
#include "biq/semilinear.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace biq;
using testing::gi;
using testing::make;
using testing::scalar;

TEST_SUITE("semilinear") {
  using semilinear::MapKind;

  TEST_CASE("application") {
    CVector x{GaussianRational::i()};
    CHECK(semilinear::apply_map(MapKind::Semilinear, CMatrix{{1}}, x) == CVector{gi(0, -1)});
    CHECK(semilinear::apply_map(MapKind::Semilinear, CMatrix{{gi(0, 1)}}, x) == CVector{GaussianRational(-1)});
    CVector y{gi(1, 2), gi(-3, 1)};
    CHECK(semilinear::apply_map(MapKind::Linear, CMatrix::identity(2), y) == y);
  }

  TEST_CASE("composition rules") {
    semilinear::Map lin2{MapKind::Linear, CMatrix{{2}}};
    semilinear::Map semi_i{MapKind::Semilinear, CMatrix{{gi(0, 1)}}};
    semilinear::Map lin_i{MapKind::Linear, CMatrix{{gi(0, 1)}}};
    semilinear::Map semi1{MapKind::Semilinear, CMatrix{{1}}};
    CHECK(semilinear::compose(semi_i, lin2) == semilinear::Map{MapKind::Semilinear, CMatrix{{gi(0, 2)}}});
    CHECK(semilinear::compose(lin_i, semi1) == semilinear::Map{MapKind::Semilinear, CMatrix{{gi(0, -1)}}});
    CHECK(semilinear::compose(semi_i, semi1) == semilinear::Map{MapKind::Linear, CMatrix{{gi(0, -1)}}});
    Rng rng(2);
    for (int k = 0; k < 20; ++k) {
      CVector x{rng.gaussian(5)};
      auto c = semilinear::compose(semi_i, semi1);
      CHECK(semilinear::apply_map(c, x) == semilinear::apply_map(semi_i, semilinear::apply_map(semi1, x)));
    }
  }

  TEST_CASE("change of basis") {
    CMatrix s{{gi(1, -1)}};
    CHECK(semilinear::change_of_basis(MapKind::Semilinear, CMatrix{{gi(0, 1)}}, s, s) == CMatrix{{1}});
    CHECK(semilinear::change_of_basis(MapKind::Linear, CMatrix{{2}}, CMatrix{{3}}, CMatrix{{3}}) == CMatrix{{2}});
    CMatrix m{{1, 2}, {3, 4}};
    CHECK(semilinear::change_of_basis(MapKind::Semilinear, m, CMatrix::identity(2), CMatrix::identity(2)) == m);
    CHECK_THROWS_AS(semilinear::change_of_basis(MapKind::Linear, m, CMatrix::identity(2), CMatrix(2, 2)),
                    SingularMatrixError);
  }

  TEST_CASE("consimilarity") {
    auto yes = semilinear::are_consimilar(CMatrix{{gi(0, 1)}}, CMatrix{{1}}, 8, 1);
    REQUIRE(yes.verdict == Verdict::Yes);
    const CMatrix& s = yes.certificate[0];
    CHECK(s.conj().inverse() * CMatrix{{gi(0, 1)}} * s == CMatrix{{1}});
    CHECK(semilinear::are_consimilar(CMatrix{{1}}, CMatrix{{2}}, 8, 1).verdict != Verdict::Yes);
    CMatrix a{{1, gi(0, 1)}, {0, 2}};
    CHECK(semilinear::are_consimilar(a, a, 8, 1).verdict == Verdict::Yes);
  }
}

TEST_SUITE("representation") {
  TEST_CASE("construction and shape checks") {
    Biquiver a2 = testing::path(2);
    CHECK_THROWS_AS(MatrixRepresentation(a2, {1, 2}, {CMatrix(1, 1)}), ValidationError);
    CHECK_THROWS_AS(MatrixRepresentation(a2, {1}, {CMatrix(1, 1)}), ValidationError);
    MatrixRepresentation z = MatrixRepresentation::zero(a2, {0, 2});
    CHECK(z.matrix(0).rows() == 2);
    CHECK(z.matrix(0).cols() == 0);
  }

  TEST_CASE("direct sums") {
    Biquiver loop = make(1, {{"a", 1, 1, 'f'}});
    MatrixRepresentation one(loop, {1}, {CMatrix{{1}}});
    MatrixRepresentation two(loop, {1}, {CMatrix{{2}}});
    auto s = direct_sum(one, two);
    CHECK(s.dims() == DimensionVector{2});
    CHECK(s.matrix(0) == CMatrix{{1, 0}, {0, 2}});
    CHECK(direct_sum(one, MatrixRepresentation::zero(loop, {0})) == one);

    Biquiver a2 = testing::path(2);
    MatrixRepresentation p(a2, {1, 0}, {CMatrix(0, 1)});
    MatrixRepresentation q(a2, {0, 1}, {CMatrix(1, 0)});
    auto pq = direct_sum(p, q);
    CHECK(pq.dims() == DimensionVector{1, 1});
    CHECK(pq.matrix(0) == CMatrix{{0}});
    CHECK_THROWS_AS(direct_sum(one, p), ValidationError);
  }

  TEST_CASE("base change") {
    Biquiver dl = make(1, {{"a", 1, 1, 'd'}});
    MatrixRepresentation a(dl, {1}, {CMatrix{{gi(0, 1)}}});
    CHECK(apply_base_change(a, std::vector<CMatrix>{CMatrix{{gi(1, -1)}}}).matrix(0) == CMatrix{{1}});
    CHECK(apply_base_change(a, identity_base_change(a.dims())) == a);
    MatrixRepresentation b(testing::path(2), {1, 1}, {CMatrix{{1}}});
    CHECK(apply_base_change(b, std::vector<CMatrix>{CMatrix{{2}}, CMatrix{{3}}}).matrix(0) ==
          CMatrix{{Rational(2, 3)}});
    CHECK_THROWS_AS(apply_base_change(b, std::vector<CMatrix>{CMatrix{{0}}, CMatrix{{3}}}), SingularMatrixError);

    Rng rng(9);
    Biquiver g = make(3, {{"a", 1, 2, 'd'}, {"b", 2, 3, 'f'}, {"c", 3, 3, 'd'}});
    auto r = random_representation(g, {2, 1, 2}, 3, 4);
    BaseChange s1, s2;
    for (int d : r.dims()) {
      s1.push_back(rng.invertible_matrix(static_cast<std::size_t>(d), 3));
      s2.push_back(rng.invertible_matrix(static_cast<std::size_t>(d), 3));
    }
    CHECK(apply_base_change(apply_base_change(r, s1), s2) == apply_base_change(r, compose_base_change(s1, s2)));
  }

  TEST_CASE("random representations") {
    Biquiver g = make(2, {{"a", 1, 2, 'd'}, {"b", 2, 2, 'f'}});
    CHECK(random_representation(g, {2, 1}, 3, 7) == random_representation(g, {2, 1}, 3, 7));
    auto z = random_representation(g, {0, 2}, 3, 7);
    CHECK(z.matrix(0).cols() == 0);
    auto small = random_representation(g, {2, 2}, 1, 3);
    for (const auto& m : small.matrices())
      for (const auto& e : m.entries()) {
        CHECK(abs(e.re()) <= 1);
        CHECK(abs(e.im()) <= 1);
        CHECK(e.re().get_den() == 1);
        CHECK(e.im().get_den() == 1);
      }
  }

  TEST_CASE("json round trip") {
    Biquiver g = make(2, {{"a", 1, 2, 'd'}, {"b", 2, 2, 'f'}});
    auto r = random_representation(g, {2, 1}, 4, 1);
    CHECK(io::parse_representation(io::representation_to_json(r, true).dump(), std::nullopt) == r);
    CHECK(io::parse_representation(io::representation_to_json(r, false).dump(), g) == r);
    CHECK_THROWS_AS(io::parse_representation(R"({"dims":[1,1],"matrices":{"a":[[["1","0"]]]}})", g),
                    ValidationError);
    CHECK_THROWS_AS(io::parse_representation(R"({"dims":[1,1],"matrices":{"a":[[["x","0"]]],"b":[[["1","0"]]]}})", g),
                    ParseError);
    CHECK_THROWS_AS(io::parse_representation(R"({"dims":[1,1],"matrices":{}})", std::nullopt), ParseError);
  }
}

TEST_SUITE("gadgets") {
  TEST_CASE("cycle gadget") {
    Biquiver loop = make(1, {{"a", 1, 1, 'f'}});
    CHECK(gadgets::cycle(loop, scalar(2)).matrix(0) == CMatrix{{2}});
    Biquiver tri = make(4, {{"a", 1, 2, 'f'}, {"b", 2, 3, 'f'}, {"c", 3, 1, 'f'}, {"d", 3, 4, 'd'}});
    CMatrix j{{0, 1}, {0, 0}};
    auto r = gadgets::cycle(tri, {"a", "b", "c"}, j);
    CHECK(r.dims() == DimensionVector{2, 2, 2, 0});
    CHECK(r.matrix("a") == CMatrix::identity(2));
    CHECK(r.matrix("c") == j);
    CHECK_THROWS_AS(gadgets::cycle(tri, {"a", "b", "d"}, j), ValidationError);
    CHECK_THROWS_AS(gadgets::cycle(tri, {"a", "b"}, j), ValidationError);
    CHECK_THROWS_AS(gadgets::cycle(testing::path(3), j), ValidationError);
    auto ids = gadgets::find_cycle(tri);
    REQUIRE(ids);
    CHECK(ids->size() == 3);
  }

  TEST_CASE("pair gadgets") {
    auto g1 = gadgets::companion(gadgets::Which::G1, scalar(0), scalar(0));
    CHECK(g1.matrix("alpha1") == CMatrix{{0, 0}, {1, 0}});
    CHECK(g1.matrix("alpha") == CMatrix{{0, 1}});
    auto g2 = gadgets::companion(gadgets::Which::G2, scalar(0), scalar(0));
    CHECK(g2.matrix("alpha") == CMatrix{{1}, {0}});
    auto g3 = gadgets::shift(gadgets::Which::G3, scalar(5), scalar(7));
    CHECK(g3.matrix("alpha1") == CMatrix{{0, 1}, {0, 0}});
    CHECK(g3.matrix("alpha2") == CMatrix{{5, 0}, {0, 7}});
    auto g4 = gadgets::shift(gadgets::Which::G4, scalar(5), scalar(7));
    CHECK(g4.dims() == DimensionVector{4});
    CHECK(g4.matrix("alpha2")(1, 0) == GaussianRational(5));
    CHECK(g4.matrix("alpha2")(3, 2) == GaussianRational(7));
    CHECK(g4.matrix("alpha1")(0, 1) == GaussianRational(1));
    CHECK_THROWS_AS(gadgets::companion(gadgets::Which::G3, scalar(0), scalar(0)), ValidationError);
    CHECK_THROWS_AS(gadgets::shift(gadgets::Which::G3, scalar(0), CMatrix::identity(2)), ValidationError);
  }

  TEST_CASE("G4 block certificate") {
    Rng rng(4);
    for (int k = 0; k < 10; ++k) {
      CMatrix p = rng.matrix(2, 2, 3), q = rng.matrix(2, 2, 3);
      CMatrix s = rng.invertible_matrix(2, 3);
      CMatrix si = s.inverse();
      auto a = gadgets::shift(gadgets::Which::G4, p, q);
      auto b = gadgets::shift(gadgets::Which::G4, si * p * s, si * q * s);
      CHECK(apply_base_change(a, gadgets::g4_block_certificate(s)) == b);
    }
  }
}

TEST_SUITE("conjugation") {
  using namespace conjugation;

  TEST_CASE("biquiver conjugation") {
    Biquiver g = make(2, {{"a", 1, 2, 'd'}});
    CHECK(conjugate_biquiver(g, 1) == make(2, {{"a", 1, 2, 'f'}}));
    Biquiver l = make(1, {{"a", 1, 1, 'd'}});
    CHECK(conjugate_biquiver(l, 0) == l);
    Biquiver m = make(3, {{"a", 1, 2, 'd'}, {"b", 2, 3, 'f'}, {"c", 2, 2, 'f'}});
    CHECK(conjugate_biquiver(conjugate_biquiver(m, 1), 1) == m);
    CHECK_THROWS_AS(conjugate_biquiver(m, 3), ValidationError);
  }

  TEST_CASE("representation conjugation") {
    Biquiver g = make(2, {{"a", 1, 2, 'd'}});
    MatrixRepresentation a(g, {1, 1}, {CMatrix{{gi(0, 1)}}});
    auto at1 = conjugate_representation(a, 0);
    CHECK(at1.biquiver() == make(2, {{"a", 1, 2, 'f'}}));
    CHECK(at1.matrix(0) == CMatrix{{gi(0, -1)}});
    auto at2 = conjugate_representation(a, 1);
    CHECK(at2.matrix(0) == CMatrix{{gi(0, 1)}});
    CHECK(conjugate_representation(at1, 0) == a);
  }

  TEST_CASE("isomorphism transport") {
    std::vector<CMatrix> s{CMatrix{{2}}, CMatrix{{gi(0, 1)}}};
    auto t = transport_isomorphism(s, 1);
    CHECK(t[0] == CMatrix{{2}});
    CHECK(t[1] == CMatrix{{gi(0, -1)}});
    CHECK(transport_isomorphism(t, 1) == s);
    CHECK(transport_isomorphism(s, 0) == s);

    Rng rng(8);
    Biquiver g = make(3, {{"a", 1, 2, 'd'}, {"b", 2, 3, 'f'}, {"c", 2, 2, 'd'}, {"d", 3, 1, 'f'}});
    for (int k = 0; k < 10; ++k) {
      auto a = random_representation(g, {1, 2, 1}, 3, rng.next());
      BaseChange sc;
      for (int d : a.dims())
        sc.push_back(rng.invertible_matrix(static_cast<std::size_t>(d), 3));
      auto b = apply_base_change(a, sc);
      for (Vertex u = 0; u < 3; ++u)
        CHECK(apply_base_change(conjugate_representation(a, u), transport_isomorphism(sc, u)) ==
              conjugate_representation(b, u));
    }
  }

  TEST_CASE("dash elimination") {
    Biquiver p = make(3, {{"a", 1, 2, 'd'}, {"b", 2, 3, 'd'}});
    auto r = dash_elimination_plan(p);
    REQUIRE(std::holds_alternative<ConjugationPlan>(r));
    CHECK(std::get<ConjugationPlan>(r).vertices == std::set<Vertex>{1});
    CHECK(apply_plan(p, std::get<ConjugationPlan>(r)).dashed_count() == 0);

    Biquiver odd = make(2, {{"a", 1, 2, 'd'}, {"b", 2, 1, 'f'}});
    auto o = dash_elimination_plan(odd);
    REQUIRE(std::holds_alternative<Impossible>(o));
    CHECK(std::get<Impossible>(o).reason.find("odd dashed parity") != std::string::npos);
    // exhaustive check that no vertex subset removes the dash
    for (int mask = 0; mask < 4; ++mask) {
      ConjugationPlan plan;
      for (Vertex v = 0; v < 2; ++v)
        if (mask & (1 << v))
          plan.vertices.insert(v);
      CHECK(apply_plan(odd, plan).dashed_count() > 0);
    }

    CHECK(std::holds_alternative<Impossible>(dash_elimination_plan(make(1, {{"a", 1, 1, 'd'}}))));
    CHECK_THROWS_AS(dash_elimination_plan(make(2, {})), PreconditionError);
  }
}
