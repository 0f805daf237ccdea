#include "doctest.h"

#include "affaut/field.hpp"
#include "test_support.hpp"

using namespace affaut;

namespace {

// independent irreducibility oracle: f (monic, degree d, coefficient digits
// low-to-high over F_p) has a root or a small factor iff reducible; checked
// by brute roots for d = 2, 3
bool quadratic_or_cubic_irreducible(const std::vector<unsigned>& f, unsigned p) {
  auto eval = [&](unsigned x) {
    unsigned acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return acc;
  };
  for (unsigned x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  return true;  // degree <= 3 with no roots is irreducible
}

}  // namespace

TEST_CASE("field construction") {
  FieldPtr qq = FieldDesc::parse("QQ");
  CHECK(qq->is_rational());
  CHECK(qq->characteristic() == 0);

  FieldPtr f2 = FieldDesc::finite(2, 1);
  CHECK(f2->cardinality() == 2);
  CHECK(f2->modulus().empty());

  // the only monic irreducible quadratic over F_2 is x^2 + x + 1: enumerate
  // all four candidates with the root oracle, then check the chosen modulus
  FieldPtr f4 = FieldDesc::finite(2, 2);
  std::vector<std::vector<unsigned>> irreducible;
  for (unsigned c0 = 0; c0 < 2; ++c0)
    for (unsigned c1 = 0; c1 < 2; ++c1) {
      std::vector<unsigned> cand{c0, c1, 1};
      if (quadratic_or_cubic_irreducible(cand, 2)) irreducible.push_back(cand);
    }
  REQUIRE(irreducible.size() == 1);
  CHECK(f4->modulus() == irreducible[0]);
  CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});

  // deterministic lowest modulus for F_8: x^3 + x + 1 beats x^3 + x^2 + 1
  FieldPtr f8 = FieldDesc::finite(2, 3);
  CHECK(f8->modulus() == std::vector<unsigned>{1, 1, 0, 1});
  CHECK(quadratic_or_cubic_irreducible(f8->modulus(), 2));

  CHECK_THROWS_WITH_AS(FieldDesc::finite(4, 1), doctest::Contains("not prime"), Error);
  CHECK_THROWS_AS(FieldDesc::finite(2, 17), Error);
  CHECK(FieldDesc::parse("GF(4)")->extension_degree() == 2);
  CHECK(FieldDesc::parse("GF(2^2)") == FieldDesc::finite(2, 2));
  CHECK(FieldDesc::parse("GF(9)")->characteristic() == 3);
}

TEST_CASE("scalar arithmetic examples") {
  FieldPtr qq = FieldDesc::rationals();
  Scalar two = Scalar::of_int(qq, 2);
  CHECK(two.inverse().str() == "1/2");

  FieldPtr f2 = FieldDesc::finite(2, 1);
  CHECK((Scalar::one(f2) + Scalar::one(f2)).is_zero());

  // g * g = g + 1 in F_4 (reduce x^2 mod x^2 + x + 1)
  FieldPtr f4 = FieldDesc::finite(2, 2);
  Scalar g = Scalar::of_index(f4, 2);  // the class of x
  Scalar g1 = Scalar::of_index(f4, 3);
  CHECK(g * g == g1);
  CHECK((g * g).str() == "[1,1]");

  CHECK_THROWS_AS(Scalar::zero(qq).inverse(), Error);
  CHECK_THROWS_AS(Scalar::zero(f4).inverse(), Error);
  CHECK_THROWS_AS(Scalar::one(qq) + Scalar::one(f2), Error);
}

TEST_CASE("field axioms on random triples") {
  std::vector<FieldPtr> fields{FieldDesc::rationals(), FieldDesc::finite(2, 1),
                               FieldDesc::finite(3, 1), FieldDesc::finite(2, 2),
                               FieldDesc::finite(5, 1)};
  for (const auto& field : fields) {
    Rng rng(0xf1e1d5 + field->cardinality());
    for (int k = 0; k < 10000; ++k) {
      Scalar a = testing::random_scalar(rng, field);
      Scalar b = testing::random_scalar(rng, field);
      Scalar c = testing::random_scalar(rng, field);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(field));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(field));
    }
  }
}

TEST_CASE("frobenius fixes every element") {
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
    FieldPtr f = FieldDesc::finite(p, r);
    for (unsigned a = 0; a < f->cardinality(); ++a)
      CHECK(f->pow(a, f->cardinality()) == a);
  }
}

TEST_CASE("canonical forms are idempotent") {
  // construction canonicalizes; re-normalizing equals the original
  Scalar half = Scalar::of_mpq(mpq_class(2, 4));
  CHECK(half.str() == "1/2");
  CHECK(Scalar::parse(FieldDesc::rationals(), half.str()) == half);

  FieldPtr f3 = FieldDesc::finite(3, 1);
  CHECK(Scalar::of_int(f3, 5) == Scalar::of_int(f3, -1));
  CHECK(Scalar::of_int(f3, 5).index() == 2);

  FieldPtr f4 = FieldDesc::finite(2, 2);
  Scalar g = Scalar::of_index(f4, 2);
  CHECK(Scalar::parse(f4, g.str()) == g);
  CHECK(Scalar::parse(f4, "[1,0]") == g);
}

TEST_CASE("param ring tags") {
  ParamRing r1 = ParamRing::parse("QQ[t]");
  CHECK(r1.kind == RingKind::PolyT);
  CHECK(r1.tag() == "QQ[t]");
  ParamRing r2 = ParamRing::parse("GF(2^2)[t,1/t]");
  CHECK(r2.kind == RingKind::LaurentT);
  CHECK(r2.base->cardinality() == 4);
  CHECK(ParamRing::parse("GF(5)").kind == RingKind::None);
}
