#include "doctest.h"

#include "affaut/tame.hpp"
#include "test_support.hpp"

using namespace affaut;

namespace {
const FieldPtr QQ = FieldDesc::rationals();
ParamRing qq() { return ring_over(QQ); }
}  // namespace

TEST_CASE("generator constructors") {
  CHECK(make_translation(QQ, {Scalar::of_int(QQ, 1), Scalar::zero(QQ)}) ==
        parse_endo("(x1 + 1, x2) over QQ"));

  MultiPoly cubic = parse_poly("x2^3", qq(), 2);
  CHECK(make_elementary(QQ, 2, 1, cubic) == parse_endo("(x1 + x2^3, x2) over QQ"));
  CHECK_THROWS_AS(make_elementary(QQ, 2, 1, parse_poly("x1", qq(), 2)), Error);

  ScalarMatrix rot{{Scalar::zero(QQ), Scalar::of_int(QQ, -1)},
                   {Scalar::one(QQ), Scalar::zero(QQ)}};
  CHECK(make_linear(QQ, rot) == parse_endo("(-x2, x1) over QQ"));
  ScalarMatrix sing{{Scalar::one(QQ), Scalar::one(QQ)}, {Scalar::one(QQ), Scalar::one(QQ)}};
  CHECK_THROWS_AS(make_linear(QQ, sing), Error);

  CHECK_THROWS_AS(
      make_triangular(QQ, {Scalar::zero(QQ), Scalar::one(QQ)},
                      {MultiPoly(qq(), 2), MultiPoly(qq(), 2)}),
      Error);

  // stated jacobians
  CHECK(jacobian(make_translation(QQ, {Scalar::of_int(QQ, 5), Scalar::zero(QQ)})) ==
        MultiPoly::of_int(qq(), 2, 1));
  CHECK(jacobian(make_elementary(QQ, 2, 1, cubic)) == MultiPoly::of_int(qq(), 2, 1));
  CHECK(jacobian(make_linear(QQ, rot)) == MultiPoly::of_int(qq(), 2, 1));
  CHECK(jacobian(make_triangular(QQ, {Scalar::of_int(QQ, 2), Scalar::of_int(QQ, 3)},
                                 {MultiPoly(qq(), 2), parse_poly("x1^2", qq(), 2)})) ==
        MultiPoly::of_int(qq(), 2, 6));
}

TEST_CASE("formal inverse examples") {
  Endo f = parse_endo("(x1 + x2^2, x2) over QQ");
  CHECK(formal_inverse(f) == parse_endo("(x1 - x2^2, x2) over QQ"));

  CHECK_THROWS_AS(formal_inverse(parse_endo("(x1^2, x2) over QQ")), Error);
  CHECK_THROWS_WITH_AS(formal_inverse(parse_endo("(x1^2, x2) over QQ")),
                       doctest::Contains("JacobianNotUnit"), Error);
}

TEST_CASE("formal inverse of random tame words") {
  for (const FieldPtr& field : {FieldDesc::rationals(), FieldDesc::finite(3, 1)}) {
    Rng rng(0x1272 + field->cardinality());
    for (int k = 0; k < 60; ++k) {
      Endo f = testing::random_plane_word(rng, field, 5, 4, false);
      Endo inv = formal_inverse(f);
      CHECK(compose(inv, f).is_identity());
      CHECK(compose(f, inv).is_identity());
      CHECK(inv.degree() == f.degree());  // plane automorphisms
    }
  }
}

TEST_CASE("formal inverse over the parameter ring") {
  // a family with unit Jacobian inverts over k[t]
  Endo g = parse_endo("(x1 + t*x2^2, x2 + t^2) over QQ[t]");
  Endo inv = formal_inverse(g);
  CHECK(compose(inv, g).is_identity());
  CHECK(compose(g, inv).is_identity());
}

TEST_CASE("jvdk factorization") {
  Endo f = parse_endo("(x2, x1 + x2^2) over QQ");
  TameWord word = jvdk_decompose(f);
  CHECK(word.evaluate() == f);
  CHECK(word.factors.size() >= 2);

  CHECK(jvdk_decompose(Endo::identity(qq(), 2)).factors.empty());

  CHECK_THROWS_WITH_AS(jvdk_decompose(parse_endo("(x1 + x2^2, x2 + x1^2) over QQ")),
                       doctest::Contains("NotAutomorphism"), Error);
}

TEST_CASE("jvdk roundtrip on random words") {
  for (const FieldPtr& field : {FieldDesc::rationals(), FieldDesc::finite(3, 1)}) {
    Rng rng(0xdec0 + field->cardinality());
    for (int k = 0; k < 60; ++k) {
      Endo f = testing::random_plane_word(rng, field, 6, 3, false);
      TameWord word = jvdk_decompose(f);
      CHECK(word.evaluate() == f);
      for (const auto& fac : word.factors) {
        if (fac.kind == TameFactor::Kind::Affine)
          CHECK(!matrix_det(fac.matrix).is_zero());
        else
          for (const auto& a : fac.scale) CHECK(!a.is_zero());
      }
    }
  }
}

TEST_CASE("is_plane_automorphism") {
  CHECK(is_plane_automorphism(parse_endo("(x1 + x2^2, x2) over QQ")));
  CHECK(!is_plane_automorphism(parse_endo("(x1, x2*x1) over QQ")));
  Rng rng(0xab);
  for (int k = 0; k < 20; ++k)
    CHECK(is_plane_automorphism(testing::random_plane_word(rng, QQ, 6, 3, false)));
}

TEST_CASE("saut word normalization") {
  // word [(2x1, x2), (x1/2, x2)] has product id; factors normalize into SAut
  Scalar two = Scalar::of_int(QQ, 2);
  TameWord w{QQ, 2, {}};
  w.factors.push_back(TameFactor::affine({{two, Scalar::zero(QQ)}, {Scalar::zero(QQ), Scalar::one(QQ)}},
                                         {Scalar::zero(QQ), Scalar::zero(QQ)}));
  w.factors.push_back(TameFactor::affine(
      {{two.inverse(), Scalar::zero(QQ)}, {Scalar::zero(QQ), Scalar::one(QQ)}},
      {Scalar::zero(QQ), Scalar::zero(QQ)}));
  TameWord norm = saut_normalize_word(w);
  CHECK(norm.evaluate().is_identity());
  for (const auto& fac : norm.factors) CHECK(fac.jacobian_unit(QQ).is_one());

  // rejected when the product has Jacobian != 1
  TameWord bad{QQ, 2, {TameFactor::triangular({two, Scalar::one(QQ)},
                                              {MultiPoly(qq(), 2), parse_poly("x1^3", qq(), 2)})}};
  CHECK_THROWS_WITH_AS(saut_normalize_word(bad), doctest::Contains("JacobianNotOne"), Error);

  // random SAut words: product preserved, all factors Jacobian 1
  Rng rng(0x5a07);
  for (int k = 0; k < 40; ++k) {
    Endo f = testing::random_plane_word(rng, QQ, 5, 3, true);
    TameWord word = jvdk_decompose(f);
    TameWord n2 = saut_normalize_word(word);
    CHECK(n2.evaluate() == f);
    for (const auto& fac : n2.factors) CHECK(fac.jacobian_unit(QQ).is_one());
  }
}
