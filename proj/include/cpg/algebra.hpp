#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cpg/laurent.hpp"

namespace cpg {

// Generator letters of the free noncommutative algebra: the bounded-face
// generators f1..fm (degree 1, codes 1..m) and x, y, z (degree 2). Edge
// variables are degree-0 coefficients and live in LaurentPoly, where they
// commute with everything.
namespace gen {
constexpr int32_t X = 1'000'000;
constexpr int32_t Y = 1'000'001;
constexpr int32_t Z = 1'000'002;
constexpr int32_t f(int j) { return j; }  // 1-based face number
}  // namespace gen

int letter_degree(int32_t letter);
std::string letter_name(int32_t letter);

struct Word {
  std::vector<int32_t> letters;

  int degree() const;
  bool empty() const { return letters.empty(); }
  // canonical term order: total degree, then letter sequence
  bool operator<(const Word& o) const;
  bool operator==(const Word& o) const { return letters == o.letters; }
  std::string to_string() const;  // "f1*f2", "x", "" for the unit word
};

// Element of the tensor algebra over the Laurent coefficient ring. The term
// map is keyed by Word, so serialization order (degree, word, monomial) falls
// out of plain iteration.
class AlgebraElement {
 public:
  AlgebraElement() : ring_(Ring::integers()), nvars_(0) {}
  AlgebraElement(Ring ring, int nvars) : ring_(ring), nvars_(nvars) {}

  static AlgebraElement scalar(LaurentPoly c);
  static AlgebraElement generator(Ring ring, int nvars, int32_t letter);

  const Ring& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  const std::map<Word, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Word w, LaurentPoly c);

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // coefficients are central, so one-sided scaling is enough
  AlgebraElement scaled(const LaurentPoly& c) const;
  // apply fn to every coefficient (t-grading, tree substitution, ...)
  template <typename F>
  AlgebraElement map_coeffs(F&& fn) const {
    AlgebraElement r(ring_, nvars_);
    for (auto& [w, c] : terms_) r.add_term(w, fn(w, c));
    return r;
  }

  std::string to_string() const;

 private:
  Ring ring_;
  int nvars_;
  std::map<Word, LaurentPoly> terms_;
};

// Images of the generators under the differential; edge variables map to 0.
// Extends to the whole algebra by the signed Leibniz rule
//   d(ab) = (da)b + (-1)^{deg a} a(db).
struct DifferentialTable {
  Ring ring;
  int nvars = 0;
  int nfaces = 0;
  std::map<int32_t, AlgebraElement> images;

  const AlgebraElement& image(int32_t letter) const { return images.at(letter); }
  AlgebraElement apply(const AlgebraElement& elt) const;
  bool operator==(const DifferentialTable& o) const {
    return nvars == o.nvars && nfaces == o.nfaces && images == o.images;
  }
  std::string to_string() const;  // one "d(g) = ..." line per generator
};

struct DSquaredReport {
  bool ok = true;
  // generators whose d(d(g)) is nonzero, with the offending element
  std::vector<std::pair<int32_t, AlgebraElement>> witnesses;
};

DSquaredReport check_d_squared(const DifferentialTable& table);

}  // namespace cpg
