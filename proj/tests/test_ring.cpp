#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cpg/ring.hpp"

using cpg::Ring;

TEST_CASE("integer ring basics") {
  Ring z = Ring::integers();
  CHECK(z.kind() == Ring::Kind::ZZ);
  CHECK(z.size() == 0);
  CHECK(z.add(3, -5) == -2);
  CHECK(z.mul(-4, 6) == -24);
  CHECK(z.neg(7) == -7);
  CHECK(z.inv(1) == 1);
  CHECK(z.inv(-1) == -1);
  CHECK_THROWS_AS((void)z.inv(2), cpg::NotAUnit);
  CHECK_THROWS_AS((void)z.units(), cpg::NotAUnit);
  CHECK(z.spec_string() == "zz");
}

TEST_CASE("prime field F5") {
  Ring f5 = Ring::prime_field(5);
  CHECK(f5.size() == 5);
  CHECK(f5.from_int(-3) == 2);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(2) == 3);
  for (int64_t a : f5.units()) CHECK(f5.mul(a, f5.inv(a)) == 1);
  CHECK(f5.units() == std::vector<int64_t>{1, 2, 3, 4});
  CHECK(f5.pow(2, -1) == 3);  // 2*3 = 6 = 1
  CHECK(f5.pow(3, 4) == 1);
  CHECK_THROWS_AS((void)f5.inv(0), cpg::NotAUnit);
  CHECK_THROWS_AS(Ring::prime_field(6), cpg::Error);
}

TEST_CASE("F4 with the default modulus a^2+a+1") {
  Ring f4 = Ring::galois_field(2, 2);
  CHECK(f4.size() == 4);
  CHECK(f4.modulus() == std::vector<int64_t>{1, 1, 1});
  // packed: 0, 1, a=2, a+1=3
  CHECK(f4.mul(2, 2) == 3);      // a^2 = a+1
  CHECK(f4.mul(2, 3) == 1);      // a(a+1) = a^2+a = 1
  CHECK(f4.add(2, 3) == 1);
  CHECK(f4.inv(2) == 3);
  CHECK(f4.to_string(2) == "a");
  CHECK(f4.to_string(3) == "a+1");
  CHECK(f4.units() == std::vector<int64_t>{1, 2, 3});
  for (int64_t a : f4.units()) CHECK(f4.pow(a, 3) == 1);
}

TEST_CASE("F9 arithmetic") {
  Ring f9 = Ring::galois_field(3, 2);
  CHECK(f9.size() == 9);
  // smallest irreducible over F3 of degree 2 is a^2+1
  CHECK(f9.modulus() == std::vector<int64_t>{1, 0, 1});
  for (int64_t a : f9.units()) {
    CHECK(f9.mul(a, f9.inv(a)) == 1);
    CHECK(f9.pow(a, 8) == 1);
  }
  // distributivity spot check over all triples
  for (int64_t a = 0; a < 9; ++a)
    for (int64_t b = 0; b < 9; ++b)
      for (int64_t c = 0; c < 9; ++c)
        CHECK(f9.mul(a, f9.add(b, c)) == f9.add(f9.mul(a, b), f9.mul(a, c)));
}

TEST_CASE("explicit modulus validation") {
  CHECK_THROWS_AS(Ring::galois_field(2, 2, {0, 0, 1}), cpg::Error);  // x^2 reducible
  CHECK_THROWS_AS(Ring::galois_field(2, 2, {1, 1}), cpg::Error);     // wrong degree
  Ring f8 = Ring::galois_field(2, 3, {1, 1, 0, 1});                  // x^3+x+1
  CHECK(f8.size() == 8);
  for (int64_t a : f8.units()) CHECK(f8.pow(a, 7) == 1);
}

TEST_CASE("field spec parsing") {
  CHECK(Ring::parse("zz") == Ring::integers());
  CHECK(Ring::parse("fp:3") == Ring::prime_field(3));
  CHECK(Ring::parse("gf:2,2") == Ring::galois_field(2, 2));
  CHECK(Ring::parse("gf:2,2").spec_string() == "gf:2,2");
  CHECK_THROWS_AS(Ring::parse("fp:four"), cpg::Error);
  CHECK_THROWS_AS(Ring::parse("gf:2"), cpg::Error);
  CHECK_THROWS_AS(Ring::parse("nonsense"), cpg::Error);
}
