#include "cpg/ring.hpp"

#include <algorithm>
#include <sstream>

namespace cpg {
namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t mod_pos(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// F_p[x] helpers on digit vectors (low-to-high, no trailing zeros implied).
using Poly = std::vector<int64_t>;

int deg(const Poly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

Poly mul_mod_p(const Poly& a, const Poly& b, int64_t p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

// remainder of a by monic f
Poly rem_monic(Poly a, const Poly& f, int64_t p) {
  int df = deg(f);
  for (int i = deg(a); i >= df; --i) {
    int64_t c = a[i] % p;
    if (!c) continue;
    for (int j = 0; j <= df; ++j) a[i - df + j] = mod_pos(a[i - df + j] - c * f[j], p);
  }
  a.resize(df);
  return a;
}

bool divides(const Poly& g, const Poly& f, int64_t p) {
  Poly r = rem_monic(f, g, p);
  return deg(r) < 0;
}

// All monic polynomials of degree d over F_p, counted via base-p odometer
// on the lower coefficients.
bool is_irreducible(const Poly& f, int64_t p) {
  int k = deg(f);
  if (k < 1) return false;
  for (int d = 1; 2 * d <= k; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      g[d] = 1;
      int64_t m = n;
      for (int i = 0; i < d; ++i) {
        g[i] = m % p;
        m /= p;
      }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

Ring Ring::integers() {
  Ring r;
  r.kind_ = Kind::ZZ;
  return r;
}

Ring Ring::prime_field(int64_t p) {
  if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
  Ring r;
  r.kind_ = Kind::FP;
  r.p_ = p;
  r.k_ = 1;
  r.q_ = p;
  return r;
}

Ring Ring::galois_field(int64_t p, int k, std::vector<int64_t> modulus) {
  if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw Error("extension degree must be >= 1");
  if (k == 1 && modulus.empty()) return prime_field(p);
  if (modulus.empty()) {
    // lexicographically smallest monic irreducible of degree k
    int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int64_t n = 0; n < count; ++n) {
      Poly f(k + 1, 0);
      f[k] = 1;
      int64_t m = n;
      for (int i = 0; i < k; ++i) {
        f[i] = m % p;
        m /= p;
      }
      if (is_irreducible(f, p)) {
        modulus = f;
        break;
      }
    }
  } else {
    if ((int)modulus.size() != k + 1 || modulus[k] != 1)
      throw Error("modulus must be monic of degree k");
    for (auto& c : modulus) c = mod_pos(c, p);
    if (!is_irreducible(modulus, p)) throw Error("modulus is reducible");
  }
  Ring r;
  r.kind_ = Kind::GF;
  r.p_ = p;
  r.k_ = k;
  r.q_ = 1;
  for (int i = 0; i < k; ++i) r.q_ *= p;
  r.mod_ = std::move(modulus);
  return r;
}

Ring Ring::parse(const std::string& spec) {
  if (spec == "zz" || spec == "ZZ") return integers();
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (head == "fp") return prime_field(std::stoll(rest));
    if (head == "gf") {
      auto comma = rest.find(',');
      if (comma == std::string::npos) throw Error("gf spec needs p,k");
      return galois_field(std::stoll(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw Error("bad field spec '" + spec + "' (want zz | fp:<p> | gf:<p>,<k>)");
}

std::vector<int64_t> Ring::unpack(int64_t a) const {
  std::vector<int64_t> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

int64_t Ring::pack(const std::vector<int64_t>& d) const {
  int64_t a = 0;
  for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
  return a;
}

int64_t Ring::from_int(int64_t n) const {
  switch (kind_) {
    case Kind::ZZ: return n;
    case Kind::FP: return mod_pos(n, p_);
    case Kind::GF: return mod_pos(n, p_);  // constants embed in the degree-0 digit
  }
  return 0;
}

int64_t Ring::add(int64_t a, int64_t b) const {
  switch (kind_) {
    case Kind::ZZ: return a + b;
    case Kind::FP: return mod_pos(a + b, p_);
    case Kind::GF: {
      auto da = unpack(a), db = unpack(b);
      for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
      return pack(da);
    }
  }
  return 0;
}

int64_t Ring::neg(int64_t a) const {
  switch (kind_) {
    case Kind::ZZ: return -a;
    case Kind::FP: return a ? p_ - a : 0;
    case Kind::GF: {
      auto d = unpack(a);
      for (auto& c : d) c = c ? p_ - c : 0;
      return pack(d);
    }
  }
  return 0;
}

int64_t Ring::mul(int64_t a, int64_t b) const {
  switch (kind_) {
    case Kind::ZZ: return a * b;
    case Kind::FP: return mod_pos(a * b, p_);
    case Kind::GF: {
      auto prod = mul_mod_p(unpack(a), unpack(b), p_);
      return pack(rem_monic(std::move(prod), mod_, p_));
    }
  }
  return 0;
}

int64_t Ring::inv(int64_t a) const {
  if (a == 0) throw NotAUnit("zero is not a unit");
  if (kind_ == Kind::ZZ) {
    if (a == 1 || a == -1) return a;
    throw NotAUnit("integer " + std::to_string(a) + " is not a unit");
  }
  // a^(q-2) in a finite field
  return pow(a, q_ - 2);
}

int64_t Ring::pow(int64_t a, int64_t n) const {
  if (n < 0) return pow(inv(a), -n);
  int64_t r = one(), base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

std::vector<int64_t> Ring::units() const {
  if (kind_ == Kind::ZZ) throw NotAUnit("cannot enumerate the units of ZZ");
  std::vector<int64_t> u;
  u.reserve(q_ - 1);
  for (int64_t a = 1; a < q_; ++a) u.push_back(a);
  return u;
}

std::string Ring::to_string(int64_t a) const {
  if (kind_ != Kind::GF || k_ == 1) return std::to_string(a);
  auto d = unpack(a);
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!first) os << "+";
    if (i == 0 || d[i] != 1) os << d[i];
    if (i > 0) {
      if (d[i] != 1) os << "*";
      os << "a";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string Ring::spec_string() const {
  switch (kind_) {
    case Kind::ZZ: return "zz";
    case Kind::FP: return "fp:" + std::to_string(p_);
    case Kind::GF: return "gf:" + std::to_string(p_) + "," + std::to_string(k_);
  }
  return "?";
}

}  // namespace cpg
