#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cpg/ring.hpp"

namespace cpg {

// Exponent vector over the edge variables e1..e_n plus the auxiliary action
// variable t (kept separate so most code can ignore it). Exponents may be
// negative: all variables are invertible in the coefficient ring.
struct Mono {
  std::vector<int16_t> e;
  int16_t t = 0;

  bool operator<(const Mono& o) const { return e != o.e ? e < o.e : t < o.t; }
  bool operator==(const Mono& o) const { return e == o.e && t == o.t; }
};

// Laurent polynomial in e1..e_n, t with coefficients in a Ring. Terms live in
// a std::map keyed by Mono, which fixes the canonical serialization order.
class LaurentPoly {
 public:
  LaurentPoly() : ring_(Ring::integers()), nvars_(0) {}
  LaurentPoly(Ring ring, int nvars) : ring_(ring), nvars_(nvars) {}

  static LaurentPoly constant(Ring ring, int nvars, int64_t c);
  // c * e_var^exp (var is 0-based). Integer scalars embed through the ring,
  // so c = -1 is fine over any field; the same holds for term and scaled.
  static LaurentPoly monomial(Ring ring, int nvars, int var, int exp, int64_t c);
  static LaurentPoly term(Ring ring, int nvars, Mono m, int64_t c);

  const Ring& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  const std::map<Mono, int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // exactly one term whose coefficient is a unit
  bool is_unit_monomial() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(int64_t c) const;
  LaurentPoly inverse() const;  // unit monomials only; throws NotAUnit
  // substitute e_i = 1 for every i with drop[i] true (t untouched)
  LaurentPoly substitute_one(const std::vector<bool>& drop) const;
  LaurentPoly times_t(int power) const;
  // multiply each term by t^(sum of w[i] * its e_i-exponent)
  LaurentPoly t_graded(const std::vector<int>& w) const;

  // Evaluate at an all-units point of F^n (t must not occur). Throws
  // ZeroAssignment if some value is zero — the augmentation domain is (F*)^n.
  int64_t eval(const std::vector<int64_t>& values) const;

  void add_term(Mono m, int64_t c);
  std::string to_string() const;  // "e1*e2*e3^-1 - 2*e4" with e/t names

 private:
  Ring ring_;
  int nvars_;
  std::map<Mono, int64_t> terms_;
};

// Shared by algebra serialization: appends "±[coeff*]mono" pieces. The bool
// says whether a printable body was produced (zero coefficient -> false).
std::string format_term(const Ring& ring, const Mono& m, int64_t c, bool leading,
                        const std::string& word_suffix);

}  // namespace cpg
