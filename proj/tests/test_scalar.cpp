#include <doctest.h>

#include <stdexcept>

#include "ainfree/scalar.hpp"

using namespace ainfree;

TEST_CASE("ring spec parsing and printing") {
  CHECK(RingSpec::parse("Z").kind == RingKind::Z);
  CHECK(RingSpec::parse("Q").kind == RingKind::Q);
  RingSpec zp = RingSpec::parse("Zp:7");
  CHECK(zp.kind == RingKind::Zp);
  CHECK(zp.p == 7);
  CHECK(RingSpec::parse("Z").str() == "Z");
  CHECK(RingSpec::parse("Q").str() == "Q");
  CHECK(zp.str() == "Zp:7");
  CHECK_FALSE(RingSpec::integers().is_field());
  CHECK(RingSpec::rationals().is_field());
  CHECK(RingSpec::residues(5).is_field());
  CHECK_THROWS_AS(RingSpec::parse("Zp:4"), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(RingSpec::parse("R"), std::invalid_argument);
}

TEST_CASE("integer arithmetic is exact at large sizes") {
  RingSpec z = RingSpec::integers();
  Scalar a = Scalar::one(z);
  for (long i = 1; i <= 30; ++i) a = a * Scalar::of(i, z);
  CHECK(a.str() == "265252859812191058636308480000000");  // 30!
  Scalar b = a + (-a);
  CHECK(b.is_zero());
  CHECK((a - a).is_zero());
  CHECK(Scalar::of(-6, z).str() == "-6");
  CHECK((Scalar::of(-6, z) * Scalar::of(7, z)).str() == "-42");
}

TEST_CASE("rational arithmetic reduces to lowest terms") {
  RingSpec q = RingSpec::rationals();
  Scalar third = Scalar::parse("1/3", q);
  Scalar sixth = Scalar::parse("1/6", q);
  CHECK((third + sixth).str() == "1/2");
  CHECK(Scalar::parse("3/6", q).str() == "1/2");
  CHECK(Scalar::parse("-4/6", q).str() == "-2/3");
  CHECK((third * Scalar::of(3, q)).str() == "1");
  CHECK(third.inverse().str() == "3");
  CHECK((third - third).is_zero());
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::invalid_argument);
}

TEST_CASE("residue arithmetic mod a prime") {
  RingSpec f7 = RingSpec::residues(7);
  for (long a = 1; a < 7; ++a) {
    Scalar s = Scalar::of(a, f7);
    CHECK((s * s.inverse()) == Scalar::one(f7));
  }
  CHECK(Scalar::of(-1, f7).str() == "6");
  CHECK((Scalar::of(3, f7) + Scalar::of(5, f7)).str() == "1");
  CHECK((Scalar::of(3, f7) * Scalar::of(5, f7)).str() == "1");
  CHECK(Scalar::parse("12", f7).str() == "5");
}

TEST_CASE("divisibility over the integers") {
  RingSpec z = RingSpec::integers();
  CHECK(Scalar::of(3, z).divides(Scalar::of(-12, z)));
  CHECK_FALSE(Scalar::of(5, z).divides(Scalar::of(12, z)));
  CHECK(Scalar::of(3, z).div_exact(Scalar::of(-12, z)).str() == "-4");
  CHECK(Scalar::of(1, z).inverse() == Scalar::one(z));
  CHECK(Scalar::of(-1, z).inverse().str() == "-1");
  CHECK_THROWS_AS(Scalar::of(2, z).inverse(), std::invalid_argument);
}

TEST_CASE("sign helper") {
  RingSpec z = RingSpec::integers();
  CHECK(sign_pow(0, z) == Scalar::one(z));
  CHECK(sign_pow(3, z).str() == "-1");
  CHECK(sign_pow(-1, z).str() == "-1");
  CHECK(sign_pow(4, z) == Scalar::one(z));
}

TEST_CASE("mixed rings are rejected") {
  Scalar a = Scalar::of(1, RingSpec::integers());
  Scalar b = Scalar::of(1, RingSpec::rationals());
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}
