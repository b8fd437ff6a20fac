#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "cpg/errors.hpp"

namespace cpg {

// Coefficient domain for all symbolic computation: the integers, a prime
// field F_p, or an extension F_{p^k} with an irreducible modulus.
//
// Elements are packed into int64_t: the value itself for ZZ, the canonical
// representative 0..p-1 for F_p, and little-endian base-p digits of the
// coefficient vector for F_{p^k}. Packing keeps polynomials cheap (element =
// one machine word) and gives every field a canonical enumeration order.
class Ring {
 public:
  enum class Kind { ZZ, FP, GF };

  static Ring integers();
  static Ring prime_field(int64_t p);
  // modulus: monic degree-k polynomial, coefficients low-to-high, length k+1.
  // Empty means "use the lexicographically smallest irreducible" (for F_4
  // that is a^2+a+1). Irreducibility is verified by trial division.
  static Ring galois_field(int64_t p, int k, std::vector<int64_t> modulus = {});
  // "zz" | "fp:<p>" | "gf:<p>,<k>"
  static Ring parse(const std::string& spec);

  Kind kind() const { return kind_; }
  int64_t characteristic() const { return kind_ == Kind::ZZ ? 0 : p_; }
  int degree() const { return k_; }
  int64_t size() const { return q_; }  // p^k, or 0 for ZZ
  bool is_field() const { return kind_ != Kind::ZZ; }
  const std::vector<int64_t>& modulus() const { return mod_; }

  int64_t zero() const { return 0; }
  int64_t one() const { return one_; }
  int64_t from_int(int64_t n) const;
  int64_t add(int64_t a, int64_t b) const;
  int64_t sub(int64_t a, int64_t b) const { return add(a, neg(b)); }
  int64_t neg(int64_t a) const;
  int64_t mul(int64_t a, int64_t b) const;
  int64_t inv(int64_t a) const;             // throws NotAUnit
  int64_t pow(int64_t a, int64_t n) const;  // negative n inverts first
  bool is_zero(int64_t a) const { return a == 0; }

  // Nonzero elements in ascending packed order; throws NotAUnit for ZZ
  // (infinitely many non-units would be skipped silently otherwise).
  std::vector<int64_t> units() const;

  std::string to_string(int64_t a) const;  // "3", "-2", "a+1", ...
  std::string spec_string() const;         // round-trips through parse()

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::ZZ;
  int64_t p_ = 0;
  int k_ = 1;
  int64_t q_ = 0;
  int64_t one_ = 1;
  std::vector<int64_t> mod_;

  std::vector<int64_t> unpack(int64_t a) const;
  int64_t pack(const std::vector<int64_t>& d) const;
};

}  // namespace cpg
