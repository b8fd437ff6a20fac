#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cpg/algebra.hpp"

using namespace cpg;

namespace {
const Ring ZZ = Ring::integers();

AlgebraElement G(int32_t letter, int nvars = 6) {
  return AlgebraElement::generator(ZZ, nvars, letter);
}

LaurentPoly mono(std::vector<int> exps, int64_t c = 1) {
  Mono m{std::vector<int16_t>(exps.begin(), exps.end()), 0};
  return LaurentPoly::term(ZZ, (int)exps.size(), std::move(m), c);
}
}  // namespace

TEST_CASE("word order: degree first, then letters") {
  Word f1{{gen::f(1)}}, f2{{gen::f(2)}}, x{{gen::X}}, f12{{gen::f(1), gen::f(2)}};
  CHECK(f1 < f2);
  CHECK(f2 < x);        // degree 1 < 2
  CHECK(f12 < x);       // same degree, f-letters sort before x
  CHECK(f1.degree() == 1);
  CHECK(f12.degree() == 2);
  CHECK(x.degree() == 2);
  CHECK(Word{}.degree() == 0);
}

TEST_CASE("noncommutative product") {
  AlgebraElement a = G(gen::f(1)) * G(gen::f(2));
  AlgebraElement b = G(gen::f(2)) * G(gen::f(1));
  CHECK(a != b);
  CHECK((a - a).is_zero());
  AlgebraElement xf = G(gen::X) * G(gen::f(1));
  CHECK(xf.terms().begin()->first == Word{{gen::X, gen::f(1)}});
}

TEST_CASE("Leibniz rule signs") {
  // d(f1) = 1, d(f2) = 1, d(x) = f1
  DifferentialTable t;
  t.ring = ZZ;
  t.nvars = 6;
  t.nfaces = 2;
  t.images[gen::f(1)] = AlgebraElement::scalar(LaurentPoly::constant(ZZ, 6, 1));
  t.images[gen::f(2)] = AlgebraElement::scalar(LaurentPoly::constant(ZZ, 6, 1));
  t.images[gen::X] = G(gen::f(1));
  t.images[gen::Y] = AlgebraElement(ZZ, 6);
  t.images[gen::Z] = AlgebraElement(ZZ, 6);

  // odd first factor: d(f1 f2) = (df1) f2 - f1 (df2) = f2 - f1
  AlgebraElement d12 = t.apply(G(gen::f(1)) * G(gen::f(2)));
  CHECK(d12 == G(gen::f(2)) - G(gen::f(1)));

  // even first factor: d(x x) = (dx) x + x (dx) = f1*x + x*f1
  AlgebraElement dxx = t.apply(G(gen::X) * G(gen::X));
  CHECK(dxx == G(gen::f(1)) * G(gen::X) + G(gen::X) * G(gen::f(1)));

  // coefficients are constants for d: d(c * f1) = c
  AlgebraElement cf1 = G(gen::f(1)).scaled(mono({2, 0, 0, 0, 0, 0}, -3));
  CHECK(t.apply(cf1) == AlgebraElement::scalar(mono({2, 0, 0, 0, 0, 0}, -3)));
}

TEST_CASE("d squared detection") {
  DifferentialTable good;
  good.ring = ZZ;
  good.nvars = 1;
  good.nfaces = 1;
  good.images[gen::f(1)] = AlgebraElement::scalar(mono({1}, 1));
  // d(x) = f1*f1 gives d(d x) = (df1)f1 - f1(df1) = e1*f1 - e1*f1 = 0
  good.images[gen::X] = G(gen::f(1), 1) * G(gen::f(1), 1);
  good.images[gen::Y] = AlgebraElement(ZZ, 1);
  good.images[gen::Z] = AlgebraElement(ZZ, 1);
  auto rep = check_d_squared(good);
  CHECK(rep.ok);
  CHECK(rep.witnesses.empty());

  DifferentialTable bad = good;
  bad.nfaces = 2;
  bad.images[gen::f(2)] = AlgebraElement::scalar(mono({2}, 1));
  bad.images[gen::X] = G(gen::f(1), 1) * G(gen::f(2), 1);
  // d(dx) = e1*f2 - e1^2*f1 != 0
  auto rep2 = check_d_squared(bad);
  CHECK_FALSE(rep2.ok);
  REQUIRE(rep2.witnesses.size() == 1);
  CHECK(rep2.witnesses[0].first == gen::X);
  CHECK(rep2.witnesses[0].second ==
        G(gen::f(2), 1).scaled(mono({1}, 1)) - G(gen::f(1), 1).scaled(mono({2}, 1)));
}

TEST_CASE("canonical serialization") {
  // the exact published shape: -e1^-2*f1 + e3^-1*e4^-1*f2 - e6^-2*f3
  AlgebraElement dy = G(gen::f(1)).scaled(mono({-2, 0, 0, 0, 0, 0}, -1)) +
                      G(gen::f(2)).scaled(mono({0, 0, -1, -1, 0, 0}, 1)) +
                      G(gen::f(3)).scaled(mono({0, 0, 0, 0, 0, -2}, -1));
  CHECK(dy.to_string() == "-e1^-2*f1 + e3^-1*e4^-1*f2 - e6^-2*f3");

  // scalars precede higher-degree words; the unit word prints bare
  AlgebraElement mix = G(gen::X).scaled(mono({1, 0, 0, 0, 0, 0})) +
                       AlgebraElement::scalar(LaurentPoly::constant(ZZ, 6, 3));
  CHECK(mix.to_string() == "3 + e1*x");
  CHECK(AlgebraElement(ZZ, 6).to_string() == "0");
}
