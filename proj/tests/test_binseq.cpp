#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "cpg/algebra.hpp"
#include "cpg/binseq.hpp"
#include "cpg/fixtures.hpp"
#include "cpg/ring.hpp"
#include "doctest.h"

using cpg::AlgebraElement;
using cpg::count_sequences;
using cpg::LaurentPoly;
using cpg::Mono;
using cpg::Ring;
using cpg::SeqEvent;
using cpg::Word;

namespace {

// Reference count: enumerate all 2^k switch subsets and simulate each one.
// Deliberately brute-force and independent of the dp in count_sequences.
LaurentPoly subset_count(const Ring& ring, int nvars,
                         const std::vector<SeqEvent>& events, int a, int b) {
  std::vector<size_t> threads;
  for (size_t i = 0; i < events.size(); ++i)
    if (events[i].kind == SeqEvent::Kind::Thread) threads.push_back(i);
  REQUIRE(threads.size() < 20);

  LaurentPoly total = LaurentPoly::constant(ring, nvars, 0);
  for (unsigned long mask = 0; mask < (1ul << threads.size()); ++mask) {
    int bit = a;
    bool alive = true;
    LaurentPoly h = LaurentPoly::constant(ring, nvars, 1);
    size_t ti = 0;
    for (size_t i = 0; i < events.size() && alive; ++i) {
      const SeqEvent& ev = events[i];
      switch (ev.kind) {
        case SeqEvent::Kind::Edge: {
          int64_t sign = bit == 0 ? (ev.rightward ? 1 : -1)
                                  : (ev.rightward ? -1 : 1);
          h = h * LaurentPoly::monomial(ring, nvars, ev.var, bit == 0 ? 1 : -1,
                                        sign);
          bit = 1 - bit;
          break;
        }
        case SeqEvent::Kind::Thread: {
          bool switched = (mask >> ti++) & 1;
          if (switched) {
            if (bit != 0) alive = false;
            bit = 1;
            h = h * ev.weight;
          }
          break;
        }
        case SeqEvent::Kind::Center:
          if (bit != 0) alive = false;
          bit = 1;
          break;
      }
    }
    if (alive && bit == b) total = total + h;
  }
  return total;
}

// epsilon notation: product of the num edges over the product of the den
// edges, 1-based
LaurentPoly eps(const Ring& ring, int nvars, std::vector<int> num,
                std::vector<int> den, int64_t c = 1) {
  Mono m;
  m.e.assign(nvars, 0);
  for (int a : num) m.e[a - 1] += 1;
  for (int b : den) m.e[b - 1] -= 1;
  return LaurentPoly::term(ring, nvars, m, c);
}

AlgebraElement faces(const Ring& ring, int nvars,
                     std::vector<LaurentPoly> coeffs) {
  AlgebraElement elt(ring, nvars);
  for (size_t j = 0; j < coeffs.size(); ++j)
    elt.add_term(Word{{cpg::gen::f((int)j + 1)}}, coeffs[j]);
  return elt;
}

}  // namespace

TEST_CASE("sequence counts on tiny configurations") {
  Ring zz = Ring::integers();
  auto one = LaurentPoly::constant(zz, 2, 1);
  auto zero = LaurentPoly::constant(zz, 2, 0);
  auto e1 = LaurentPoly::monomial(zz, 2, 0, 1, 1);
  auto w = LaurentPoly::monomial(zz, 2, 1, 1, -1);  // -e2

  std::vector<SeqEvent> center = {SeqEvent::center()};
  CHECK(count_sequences(zz, 2, center, 0, 1) == one);
  CHECK(count_sequences(zz, 2, center, 0, 0) == zero);
  CHECK(count_sequences(zz, 2, center, 1, 1) == zero);

  std::vector<SeqEvent> edge = {SeqEvent::edge(0, true)};
  CHECK(count_sequences(zz, 2, edge, 0, 1) == e1);
  CHECK(count_sequences(zz, 2, edge, 1, 0) == -e1.inverse());
  CHECK(count_sequences(zz, 2, edge, 0, 0) == zero);

  std::vector<SeqEvent> edge_left = {SeqEvent::edge(0, false)};
  CHECK(count_sequences(zz, 2, edge_left, 0, 1) == -e1);
  CHECK(count_sequences(zz, 2, edge_left, 1, 0) == e1.inverse());

  std::vector<SeqEvent> thread = {SeqEvent::thread(w)};
  CHECK(count_sequences(zz, 2, thread, 0, 1) == w);
  CHECK(count_sequences(zz, 2, thread, 0, 0) == one);
  CHECK(count_sequences(zz, 2, thread, 1, 1) == one);

  // a switch next to the center in the same gap can never fire
  std::vector<SeqEvent> tc = {SeqEvent::thread(w), SeqEvent::center()};
  CHECK(count_sequences(zz, 2, tc, 0, 1) == one);
  std::vector<SeqEvent> ct = {SeqEvent::center(), SeqEvent::thread(w)};
  CHECK(count_sequences(zz, 2, ct, 0, 1) == one);
}

TEST_CASE("dp agrees with subset enumeration on random configurations") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> len(0, 10), kind(0, 5), var(0, 3),
      expo(-2, 2), coin(0, 1);

  for (Ring ring : {Ring::integers(), Ring::prime_field(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<SeqEvent> events;
      int n = len(rng);
      for (int i = 0; i < n; ++i) {
        int k = kind(rng);
        if (k <= 2) {
          events.push_back(SeqEvent::edge(var(rng), coin(rng) == 1));
        } else if (k <= 4) {
          Mono m;
          m.e.assign(4, 0);
          m.e[var(rng)] += expo(rng);
          m.e[var(rng)] += expo(rng);
          events.push_back(SeqEvent::thread(
              LaurentPoly::term(ring, 4, m, coin(rng) == 1 ? 1 : -1)));
        } else {
          events.push_back(SeqEvent::center());
        }
      }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          CHECK(count_sequences(ring, 4, events, a, b) ==
                subset_count(ring, 4, events, a, b));
    }
  }
}

TEST_CASE("dp agrees with subset enumeration on the fixture tines") {
  Ring zz = Ring::integers();
  for (const char* name : {"k4", "g1", "mod4prism"}) {
    auto fx = cpg::load_fixture(name);
    int nvars = fx.graph.num_edges();
    for (int j = 1; j <= fx.graph.num_bounded(); ++j) {
      auto events = cpg::tine_events(fx.graph, *fx.garden, zz, j);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          CHECK(count_sequences(zz, nvars, events, a, b) ==
                subset_count(zz, nvars, events, a, b));
    }
  }
}

TEST_CASE("doubled square differential matches the worked example") {
  auto fx = cpg::load_fixture("g1");
  Ring zz = Ring::integers();
  int n = 6;
  auto table = cpg::differential(fx.graph, *fx.garden, zz);

  auto E = [&](std::vector<int> num, std::vector<int> den, int64_t c = 1) {
    return eps(zz, n, std::move(num), std::move(den), c);
  };

  CHECK(table.image(cpg::gen::f(1)) ==
        AlgebraElement::scalar(E({1, 2}, {4}, -1) + E({1, 2}, {3}, -1)));
  CHECK(table.image(cpg::gen::f(2)) ==
        AlgebraElement::scalar(E({4, 5}, {6}) + E({3, 5}, {6}) +
                               E({2, 4}, {1}, -1) + E({2, 3}, {1}, -1)));
  CHECK(table.image(cpg::gen::f(3)) ==
        AlgebraElement::scalar(E({5, 6}, {4}) + E({5, 6}, {3})));

  // d x = -e1^-2 (-eps_{14,2} + eps_{46,5}) f1 + e3^-1 e4^-1 eps_{46,5} f2
  auto dx = faces(zz, n,
                  {E({1, 4}, {1, 1, 2}) + E({4, 6}, {1, 1, 5}, -1),
                   E({4, 6}, {3, 4, 5}), LaurentPoly::constant(zz, n, 0)});
  CHECK(table.image(cpg::gen::X) == dx);

  auto dy = faces(zz, n,
                  {E({}, {1, 1}, -1), E({}, {3, 4}), E({}, {6, 6}, -1)});
  CHECK(table.image(cpg::gen::Y) == dy);

  // d z = (-eps_{13,2} + eps_{36,5})(-e1^-2) f1 + eps_{36,5} e3^-1 e4^-1 f2
  auto dz = faces(zz, n,
                  {E({1, 3}, {1, 1, 2}) + E({3, 6}, {1, 1, 5}, -1),
                   E({3, 6}, {3, 4, 5}), LaurentPoly::constant(zz, n, 0)});
  CHECK(table.image(cpg::gen::Z) == dz);
}

TEST_CASE("tetrahedron differential matches the worked example") {
  auto fx = cpg::load_fixture("k4");
  Ring zz = Ring::integers();
  int n = 6;
  auto table = cpg::differential(fx.graph, *fx.garden, zz);

  auto E = [&](std::vector<int> num, std::vector<int> den, int64_t c = 1) {
    return eps(zz, n, std::move(num), std::move(den), c);
  };

  CHECK(table.image(cpg::gen::f(1)) ==
        AlgebraElement::scalar(E({1, 2}, {6}, -1) + E({2, 3}, {5}, -1) +
                               E({1, 3}, {4})));
  CHECK(table.image(cpg::gen::f(2)) ==
        AlgebraElement::scalar(E({2, 6}, {1}, -1) + E({2, 5}, {3}, -1) +
                               E({5, 6}, {4})));
  CHECK(table.image(cpg::gen::f(3)) ==
        AlgebraElement::scalar(E({4, 5}, {6}) + E({3, 5}, {2}, -1) +
                               E({3, 4}, {1})));

  auto dx = faces(zz, n,
                  {E({4}, {1, 3}, -1), E({4}, {5, 6}),
                   LaurentPoly::constant(zz, n, 0)});
  CHECK(table.image(cpg::gen::X) == dx);

  auto dy = faces(zz, n,
                  {E({}, {1, 1}, -1), E({3}, {1, 5, 6}) + E({3}, {2, 4, 6}, -1),
                   E({}, {4, 4}, -1)});
  CHECK(table.image(cpg::gen::Y) == dy);

  auto dz = faces(zz, n,
                  {E({4, 6}, {1, 1, 5}, -1) + E({6}, {1, 2}),
                   E({3, 4}, {1, 5, 5}) + E({3}, {2, 5}, -1),
                   LaurentPoly::constant(zz, n, 0)});
  CHECK(table.image(cpg::gen::Z) == dz);
}

TEST_CASE("differential squares to zero on the hand fixtures") {
  for (const char* name : {"k4", "g1"}) {
    auto fx = cpg::load_fixture(name);
    for (Ring ring : {Ring::integers(), Ring::prime_field(2),
                      Ring::prime_field(7), Ring::galois_field(2, 2)}) {
      auto table = cpg::differential(fx.graph, *fx.garden, ring);
      auto report = cpg::check_d_squared(table);
      CHECK(report.ok);
      CHECK(report.witnesses.empty());
    }
  }
}

// The genus-4 decoration is transcribed from a worked example that is only
// published up to sign, so its regression data lives over F2.  Edges are
// a..n,p = 1..15.
TEST_CASE("modified 4-prism differential matches its worked example over F2") {
  auto fx = cpg::load_fixture("mod4prism");
  Ring f2 = Ring::prime_field(2);
  int n = 15;
  auto table = cpg::differential(fx.graph, *fx.garden, f2);

  auto E = [&](std::vector<int> num, std::vector<int> den) {
    return eps(f2, n, std::move(num), std::move(den));
  };

  CHECK(table.image(cpg::gen::f(1)) ==
        AlgebraElement::scalar(E({8, 1}, {9}) + E({8, 4}, {11}) +
                               E({4, 12}, {15}) + E({12, 1}, {13})));
  CHECK(table.image(cpg::gen::f(5)) ==
        AlgebraElement::scalar(E({5, 6}, {14}) + E({6, 7}, {3}) +
                               E({7, 5}, {15})));
  CHECK(table.image(cpg::gen::f(6)) ==
        AlgebraElement::scalar(E({10, 3}, {11}) + E({10, 2}, {9}) +
                               E({2, 14}, {13}) + E({14, 6}, {5}) +
                               E({6, 3}, {7})));

  // shared subexpressions of the published differentials
  auto t23a = E({12, 13}, {1}) + E({12, 15}, {4});    // two corners of f3
  auto t44b = E({4, 15}, {12}) + E({4, 11}, {8});     // two corners of f4
  auto t22 = E({9, 2}, {10}) + E({13, 2}, {14});      // two corners of f2
  auto t33 = E({13, 14}, {2}) + E({14, 5}, {6});      // two corners of f3
  auto t33p = t33 + E({15, 5}, {7});                  // ... plus a third
  auto t44c = E({7, 3}, {6}) + E({11, 3}, {10});      // two more of f4
  auto mbr = E({13}, {}) + E({}, {13}) * t22 * t33;   // bracket around e13

  auto c1 = E({}, {8, 8});
  auto c2 = E({}, {9, 11, 13}) *
            (E({15}, {}) + E({}, {15}) * t23a * t44b);
  auto c3 = E({}, {9, 11, 13, 15}) * t22 * t44b;
  auto c4 = E({}, {9, 11, 15}) *
            (E({13}, {}) + E({}, {13}) * t22 * t33p);
  auto c5 = E({}, {9, 11, 5, 7}) * t44c * mbr;
  auto c6 = E({}, {10, 10});
  CHECK(table.image(cpg::gen::Y) == faces(f2, n, {c1, c2, c3, c4, c5, c6}));

  auto kjc = E({11, 10}, {3});
  auto dx = faces(f2, n,
                  {kjc * c1 + E({8, 11}, {4}) * E({}, {8, 8}),
                   kjc * c2 + E({11}, {9, 13, 15}) * t23a,
                   kjc * c3 + E({11}, {9, 13, 15}) * t22,
                   kjc * c4,
                   kjc * c5 + E({11}, {9, 5, 7}) * mbr,
                   LaurentPoly::constant(f2, n, 0)});
  CHECK(table.image(cpg::gen::X) == dx);

  auto jib = E({10, 9}, {2});
  auto dz = faces(f2, n,
                  {jib * c1 + E({}, {8, 8}) * E({9, 8}, {1}),
                   jib * c2,
                   jib * c3 + E({9}, {13, 11, 15}) * t44b,
                   jib * c4 + E({9}, {13, 11, 15}) * t33p,
                   jib * c5 + E({9}, {13, 11, 5, 7}) * t33 * t44c,
                   LaurentPoly::constant(f2, n, 0)});
  CHECK(table.image(cpg::gen::Z) == dz);

  auto report = cpg::check_d_squared(table);
  CHECK(report.ok);
  CHECK(report.witnesses.empty());
}

TEST_CASE("serialized differential lines match the frozen strings") {
  Ring zz = Ring::integers();
  auto g1 = cpg::load_fixture("g1");
  auto t1 = cpg::differential(g1.graph, *g1.garden, zz);
  CHECK(t1.image(cpg::gen::Y).to_string() ==
        "-e1^-2*f1 + e3^-1*e4^-1*f2 - e6^-2*f3");

  auto k4 = cpg::load_fixture("k4");
  auto t2 = cpg::differential(k4.graph, *k4.garden, zz);
  CHECK(t2.image(cpg::gen::X).to_string() ==
        "-e1^-1*e3^-1*e4*f1 + e4*e5^-1*e6^-1*f2");
}
