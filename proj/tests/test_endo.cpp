#include "doctest.h"

#include "affaut/endo.hpp"
#include "affaut/identities.hpp"
#include "test_support.hpp"

using namespace affaut;

namespace {
const FieldPtr QQ = FieldDesc::rationals();
ParamRing qq() { return ring_over(QQ); }
}  // namespace

TEST_CASE("composition convention") {
  Endo f = parse_endo("(x1 + x2^2, x2) over QQ");
  Endo g = parse_endo("(x1, x2 + 1) over QQ");
  CHECK(compose(f, g) == parse_endo("(x1 + (x2+1)^2, x2 + 1) over QQ"));

  Rng rng(0xc0);
  for (int k = 0; k < 20; ++k) {
    Endo w = testing::random_plane_word(rng, QQ, 3, 3, false);
    CHECK(compose(w, Endo::identity(qq(), 2)) == w);
    CHECK(compose(Endo::identity(qq(), 2), w) == w);
  }
}

TEST_CASE("nagata family composes additively") {
  Endo n1 = nagata_map(Scalar::of_int(QQ, 1));
  Endo n2 = nagata_map(Scalar::of_int(QQ, 2));
  Endo n3 = nagata_map(Scalar::of_int(QQ, 3));
  CHECK(compose(n1, n2) == n3);
  CHECK(jacobian(n1) == MultiPoly::of_int(qq(), 3, 1));
}

TEST_CASE("jacobian examples") {
  CHECK(jacobian(parse_endo("(x1 + x2^2, x2) over QQ")) == MultiPoly::of_int(qq(), 2, 1));
  CHECK(jacobian(parse_endo("(2*x1, x2) over QQ")) == MultiPoly::of_int(qq(), 2, 2));
}

TEST_CASE("chain rule") {
  Endo id = Endo::identity(qq(), 2);
  CHECK(chain_rule_check(id, id));
  Rng rng(0xcba1);
  for (int k = 0; k < 20; ++k) {
    Endo f = testing::random_plane_word(rng, QQ, 2, 3, false);
    Endo g = testing::random_plane_word(rng, QQ, 2, 3, false);
    CHECK(chain_rule_check(f, g));
  }
  Endo na = nagata_map(Scalar::of_int(QQ, 1));
  Endo nb = nagata_map(Scalar::of_int(QQ, 2));
  CHECK(chain_rule_check(na, nb));
}

TEST_CASE("jacobian is multiplicative") {
  Rng rng(0xfaceb);
  for (int k = 0; k < 30; ++k) {
    Endo f = testing::random_plane_word(rng, QQ, 2, 3, false);
    Endo g = testing::random_plane_word(rng, QQ, 2, 3, false);
    MultiPoly lhs = jacobian(compose(f, g));
    MultiPoly rhs = jacobian(f).substitute(g.components()) * jacobian(g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("parameter specialization") {
  Endo g = parse_endo("(x1 - 2*t*x2 - t^2, x2) over QQ[t]");
  CHECK(g.specialize_t(Scalar::zero(QQ)).is_identity());
  CHECK(g.specialize_t(Scalar::one(QQ)) == parse_endo("(x1 - 2*x2 - 1, x2) over QQ"));

  Endo rho = parse_endo("(x1 + t^-1, x2) over QQ[t,1/t]");
  CHECK_THROWS_AS(rho.specialize_t(Scalar::zero(QQ)), Error);
  CHECK(rho.specialize_t(Scalar::of_int(QQ, 2)) == parse_endo("(x1 + 1/2, x2) over QQ"));

  // specialization commutes with composition
  Rng rng(0x5eed);
  ParamRing qqt = ring_over(QQ, RingKind::PolyT);
  for (int k = 0; k < 30; ++k) {
    std::vector<MultiPoly> fc, gc;
    for (int i = 1; i <= 2; ++i) {
      fc.push_back(MultiPoly::variable(qqt, 2, i) + testing::random_poly(rng, qqt, 2, 2, 2));
      gc.push_back(MultiPoly::variable(qqt, 2, i) + testing::random_poly(rng, qqt, 2, 2, 2));
    }
    Endo f(qqt, fc), g(qqt, gc);
    for (long long t0 : {0LL, 1LL, 2LL}) {
      Scalar s = Scalar::of_int(QQ, t0);
      CHECK(compose(f, g).specialize_t(s) == compose(f.specialize_t(s), g.specialize_t(s)));
    }
  }
}

TEST_CASE("linear part") {
  auto [m1, v1] = linear_part(parse_endo("(x1 + x2^2, x2) over QQ"));
  CHECK(matrix_is_identity(m1));
  CHECK(v1[0].is_zero());
  CHECK(v1[1].is_zero());

  auto [m2, v2] = linear_part(parse_endo("(x1 + 3, x2) over QQ"));
  CHECK(matrix_is_identity(m2));
  CHECK(v2[0] == Scalar::of_int(QQ, 3));

  // commutator h^{-1} beta^{-1} h beta via the composition oracle
  Endo h = parse_endo("(x1 + 1, x2) over QQ");
  Endo h_inv = parse_endo("(x1 - 1, x2) over QQ");
  Endo beta = parse_endo("(x1, x2 + x1*(x1-1)^2) over QQ");
  Endo beta_inv = parse_endo("(x1, x2 - x1*(x1-1)^2) over QQ");
  Endo w = compose(h_inv, compose(beta_inv, compose(h, beta)));
  auto [m3, v3] = linear_part(w);
  CHECK(m3[0][0].is_one());
  CHECK(m3[0][1].is_zero());
  CHECK(m3[1][0].is_one());
  CHECK(m3[1][1].is_one());
  CHECK(v3[0].is_zero());
  CHECK(v3[1].is_zero());

  // multiplicative on origin-fixing maps
  Rng rng(0x11a);
  for (int k = 0; k < 20; ++k) {
    Endo f = testing::random_plane_word(rng, QQ, 2, 3, false);
    Endo g = testing::random_plane_word(rng, QQ, 2, 3, false);
    auto recentre = [](const Endo& e) {
      std::vector<Scalar> c = e.evaluate({Scalar::zero(QQ), Scalar::zero(QQ)});
      return compose(Endo::translation(e.ring(), {-c[0], -c[1]}), e);
    };
    Endo f0 = recentre(f), g0 = recentre(g);
    auto [mf, vf] = linear_part(f0);
    auto [mg, vg] = linear_part(g0);
    auto [mfg, vfg] = linear_part(compose(f0, g0));
    CHECK(mfg == matrix_mul(mf, mg));
  }
}

TEST_CASE("associativity of composition") {
  Rng rng(0xa550c);
  for (int k = 0; k < 15; ++k) {
    Endo f = testing::random_plane_word(rng, QQ, 2, 2, false);
    Endo g = testing::random_plane_word(rng, QQ, 2, 2, false);
    Endo h = testing::random_plane_word(rng, QQ, 2, 2, false);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("endo text round trip") {
  for (const char* text : {"(x1 + x2^2, x2) over QQ", "(x1 - 2*t*x2 - t^2, x2) over QQ[t]",
                           "(x2, x1) over GF(3)", "([1,0]*x1, x2) over GF(2^2)"}) {
    Endo e = parse_endo(text);
    CHECK(parse_endo(e.str()) == e);
  }
  CHECK(parse_endo("(x1 + x2^2, x2)", ring_over(QQ)) == parse_endo("(x1 + x2^2, x2) over QQ"));
  CHECK_THROWS_AS(parse_endo("(x1, x2)"), Error);          // no ring anywhere
  CHECK_THROWS_AS(parse_endo("x1, x2 over QQ"), Error);    // missing parens
  CHECK_THROWS_AS(parse_endo("(x1, x3) over QQ"), Error);  // arity
}
