#include "doctest.h"

#include "affaut/multipoly.hpp"
#include "test_support.hpp"

using namespace affaut;

namespace {
ParamRing qq() { return ring_over(FieldDesc::rationals()); }
ParamRing qq_t() { return ring_over(FieldDesc::rationals(), RingKind::PolyT); }
ParamRing qq_laurent() { return ring_over(FieldDesc::rationals(), RingKind::LaurentT); }
}  // namespace

TEST_CASE("basic arithmetic") {
  MultiPoly x1 = MultiPoly::variable(qq(), 2, 1);
  MultiPoly x2 = MultiPoly::variable(qq(), 2, 2);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

  ParamRing f2 = ring_over(FieldDesc::finite(2, 1));
  MultiPoly y = MultiPoly::variable(f2, 1, 1);
  MultiPoly one = MultiPoly::of_int(f2, 1, 1);
  CHECK((y + one).pow(2) == y.pow(2) + one);  // frobenius

  MultiPoly t = MultiPoly::param(qq_laurent(), 1);
  MultiPoly xl = MultiPoly::variable(qq_laurent(), 1, 1);
  MultiPoly tinv(qq_laurent(), 1);
  tinv.add_term(Monomial{-1, {0}}, Scalar::one(FieldDesc::rationals()));
  CHECK((xl + tinv) * t == t * xl + MultiPoly::of_int(qq_laurent(), 1, 1));
}

TEST_CASE("substitution examples") {
  // identity substitution fixes the quadric
  MultiPoly delta = parse_poly("x1*x3 + x2^2", qq(), 3);
  std::vector<MultiPoly> id_images;
  for (int i = 1; i <= 3; ++i) id_images.push_back(MultiPoly::variable(qq(), 3, i));
  CHECK(delta.substitute(id_images) == delta);

  // R(a x + b) = a R for R = x^q - x over F_q
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    FieldPtr f = FieldDesc::finite(p, r);
    ParamRing ring = ring_over(f);
    MultiPoly x = MultiPoly::variable(ring, 1, 1);
    MultiPoly big_r = x.pow(static_cast<int>(f->cardinality())) - x;
    for (unsigned a = 1; a < f->cardinality(); ++a)
      for (unsigned b = 0; b < f->cardinality(); ++b) {
        MultiPoly image = x * Scalar::of_index(f, a) + MultiPoly::constant(ring, 1, Scalar::of_index(f, b));
        CHECK(big_r.substitute({image}) == big_r * Scalar::of_index(f, a));
      }
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Rng rng(0x5b57);
  for (int k = 0; k < 200; ++k) {
    MultiPoly p = testing::random_poly(rng, qq(), 2, 4, 4);
    MultiPoly q = testing::random_poly(rng, qq(), 2, 4, 4);
    std::vector<MultiPoly> images{testing::random_poly(rng, qq(), 2, 3, 3),
                                  testing::random_poly(rng, qq(), 2, 3, 3)};
    CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
    CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
  }
}

TEST_CASE("derivative") {
  ParamRing f2 = ring_over(FieldDesc::finite(2, 1));
  MultiPoly x = MultiPoly::variable(f2, 2, 1);
  CHECK(x.pow(2).derivative(1).is_zero());  // characteristic 2 kills 2x

  MultiPoly delta = parse_poly("x1*x3 + x2^2", qq(), 3);
  CHECK(delta.derivative(2) == parse_poly("2*x2", qq(), 3));

  // d/dx1 of x1 (x1 - 1)^2 is 1 at x1 = 0 and 0 at x1 = 1
  MultiPoly shear = parse_poly("x1*(x1-1)^2", qq(), 1);
  MultiPoly d = shear.derivative(1);
  FieldPtr f = FieldDesc::rationals();
  CHECK(d.evaluate({Scalar::zero(f)}) == Scalar::one(f));
  CHECK(d.evaluate({Scalar::one(f)}) == Scalar::zero(f));
}

TEST_CASE("leibniz rule on random pairs") {
  Rng rng(0x1e1b);
  for (int k = 0; k < 200; ++k) {
    MultiPoly p = testing::random_poly(rng, qq(), 3, 4, 4);
    MultiPoly q = testing::random_poly(rng, qq(), 3, 4, 4);
    for (int i = 1; i <= 3; ++i)
      CHECK((p * q).derivative(i) == p.derivative(i) * q + q.derivative(i) * p);
  }
}

TEST_CASE("bigraded decomposition") {
  MultiPoly g = parse_poly("-2*t*x2 - t^2", qq_t(), 2);
  auto parts = g.bigraded_parts();
  REQUIRE(parts.size() == 2);
  CHECK(parts.at({1, 1}) == parse_poly("-2*x2", qq(), 2));
  CHECK(parts.at({2, 0}) == parse_poly("-1", qq(), 2));

  MultiPoly single = parse_poly("t*x2^3", qq_t(), 2);
  auto sp = single.bigraded_parts();
  REQUIRE(sp.size() == 1);
  CHECK(sp.at({1, 3}) == parse_poly("x2^3", qq(), 2));

  MultiPoly constant = parse_poly("5", qq_t(), 2);
  auto cp = constant.bigraded_parts();
  REQUIRE(cp.size() == 1);
  CHECK(cp.at({0, 0}) == parse_poly("5", qq(), 2));

  // recomposition is exact, parts are t-free and homogeneous
  Rng rng(0xb16);
  for (int k = 0; k < 100; ++k) {
    MultiPoly p = testing::random_poly(rng, qq_t(), 2, 5, 6);
    MultiPoly recomposed(qq_t(), 2);
    for (const auto& [key, part] : p.bigraded_parts()) {
      CHECK(!part.depends_on_t());
      for (const auto& [m, c] : part.terms()) CHECK(m.x_degree() == key.second);
      MultiPoly lifted = part.cast(RingKind::PolyT);
      recomposed = recomposed + lifted * MultiPoly::param(qq_t(), 2).pow(key.first);
    }
    CHECK(recomposed == p);
  }
}

TEST_CASE("parser and printer") {
  CHECK(parse_poly("x1*x3 + x2^2", qq(), 3) ==
        MultiPoly::variable(qq(), 3, 1) * MultiPoly::variable(qq(), 3, 3) +
            MultiPoly::variable(qq(), 3, 2).pow(2));

  CHECK_THROWS_AS(parse_poly("t^-1*x1", qq_t(), 2), Error);
  CHECK_THROWS_WITH_AS(parse_poly("t^-1*x1", qq_t(), 2), doctest::Contains("NegativeTPower"),
                       Error);
  CHECK_NOTHROW(parse_poly("t^-1*x1", qq_laurent(), 2));

  ParamRing f2 = ring_over(FieldDesc::finite(2, 1));
  CHECK(parse_poly("(x2+1)^2", f2, 2) == parse_poly("x2^2+1", f2, 2));

  CHECK_THROWS_AS(parse_poly("x4", qq(), 3), Error);
  CHECK_THROWS_AS(parse_poly("x1 +", qq(), 2), Error);
  CHECK_THROWS_AS(parse_poly("t", qq(), 2), Error);
  CHECK(parse_poly("1/2*x1 - x2/3", qq(), 2) ==
        MultiPoly::variable(qq(), 2, 1) * Scalar::of_mpq(mpq_class(1, 2)) -
            MultiPoly::variable(qq(), 2, 2) * Scalar::of_mpq(mpq_class(1, 3)));

  // extension-field coefficient lists
  ParamRing f4 = ring_over(FieldDesc::finite(2, 2));
  MultiPoly withg = parse_poly("[1,0]*x1 + [1,1]", f4, 1);
  CHECK(withg.str() == "[1,0]*x1 + [1,1]");

  // print-parse round trip on random polynomials
  Rng rng(0x9a35e);
  for (int k = 0; k < 200; ++k) {
    MultiPoly p = testing::random_poly(rng, qq(), 3, 5, 5);
    CHECK(parse_poly(p.str(), qq(), 3) == p);
    MultiPoly pt = testing::random_poly(rng, qq_laurent(), 2, 4, 4);
    CHECK(parse_poly(pt.str(), qq_laurent(), 2) == pt);
    ParamRing f5 = ring_over(FieldDesc::finite(5, 1));
    MultiPoly pf = testing::random_poly(rng, f5, 2, 4, 4);
    CHECK(parse_poly(pf.str(), f5, 2) == pf);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::vector<ParamRing> rings{qq(), ring_over(FieldDesc::finite(3, 1)), qq_t()};
  for (const auto& ring : rings) {
    Rng rng(0xa10 + static_cast<unsigned>(ring.kind));
    for (int k = 0; k < 1000; ++k) {
      MultiPoly a = testing::random_poly(rng, ring, 3, 6, 3);
      MultiPoly b = testing::random_poly(rng, ring, 3, 6, 3);
      MultiPoly c = testing::random_poly(rng, ring, 3, 6, 3);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == MultiPoly(ring, 3));
    }
  }
}

TEST_CASE("specialization and casts") {
  MultiPoly g = parse_poly("x1 - 2*t*x2 - t^2", qq_t(), 2);
  CHECK(g.specialize_t(Scalar::zero(FieldDesc::rationals())) == parse_poly("x1", qq(), 2));
  CHECK(g.specialize_t(Scalar::one(FieldDesc::rationals())) == parse_poly("x1 - 2*x2 - 1", qq(), 2));

  MultiPoly laurent = parse_poly("t^-1*x1", qq_laurent(), 1);
  CHECK_THROWS_AS(laurent.specialize_t(Scalar::zero(FieldDesc::rationals())), Error);
  CHECK_THROWS_AS(laurent.cast(RingKind::PolyT), Error);
  CHECK((laurent * MultiPoly::param(qq_laurent(), 1)).cast(RingKind::PolyT).ring().kind ==
        RingKind::PolyT);
}
