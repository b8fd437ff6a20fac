#include "cpg/laurent.hpp"

#include <sstream>

namespace cpg {

LaurentPoly LaurentPoly::constant(Ring ring, int nvars, int64_t c) {
  LaurentPoly p(ring, nvars);
  p.add_term(Mono{std::vector<int16_t>(nvars, 0), 0}, ring.from_int(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(Ring ring, int nvars, int var, int exp, int64_t c) {
  Mono m{std::vector<int16_t>(nvars, 0), 0};
  m.e[var] = (int16_t)exp;
  return term(ring, nvars, std::move(m), c);
}

LaurentPoly LaurentPoly::term(Ring ring, int nvars, Mono m, int64_t c) {
  LaurentPoly p(ring, nvars);
  int64_t cc = ring.from_int(c);
  p.add_term(std::move(m), cc);
  return p;
}

void LaurentPoly::add_term(Mono m, int64_t c) {
  if (ring_.is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  int64_t c = terms_.begin()->second;
  if (ring_.is_field()) return !ring_.is_zero(c);
  return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ring_, nvars_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, ring_.neg(c));
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(ring_, nvars_);
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      Mono m = m1;
      for (int i = 0; i < nvars_; ++i) m.e[i] = (int16_t)(m.e[i] + m2.e[i]);
      m.t = (int16_t)(m.t + m2.t);
      r.add_term(std::move(m), ring_.mul(c1, c2));
    }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::scaled(int64_t c) const {
  LaurentPoly r(ring_, nvars_);
  int64_t cc = ring_.from_int(c);
  for (auto& [m, coef] : terms_) r.add_term(m, ring_.mul(coef, cc));
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit_monomial()) throw NotAUnit("not a unit monomial: " + to_string());
  auto& [m, c] = *terms_.begin();
  Mono mi = m;
  for (auto& x : mi.e) x = (int16_t)(-x);
  mi.t = (int16_t)(-mi.t);
  return term(ring_, nvars_, std::move(mi), ring_.inv(c));
}

LaurentPoly LaurentPoly::substitute_one(const std::vector<bool>& drop) const {
  LaurentPoly r(ring_, nvars_);
  for (auto& [m, c] : terms_) {
    Mono mm = m;
    for (int i = 0; i < nvars_; ++i)
      if (drop[i]) mm.e[i] = 0;
    r.add_term(std::move(mm), c);
  }
  return r;
}

LaurentPoly LaurentPoly::times_t(int power) const {
  LaurentPoly r(ring_, nvars_);
  for (auto& [m, c] : terms_) {
    Mono mm = m;
    mm.t = (int16_t)(mm.t + power);
    r.add_term(std::move(mm), c);
  }
  return r;
}

LaurentPoly LaurentPoly::t_graded(const std::vector<int>& w) const {
  LaurentPoly r(ring_, nvars_);
  for (auto& [m, c] : terms_) {
    int shift = 0;
    for (int i = 0; i < nvars_; ++i) shift += w[i] * m.e[i];
    Mono mm = m;
    mm.t = (int16_t)(mm.t + shift);
    r.add_term(std::move(mm), c);
  }
  return r;
}

int64_t LaurentPoly::eval(const std::vector<int64_t>& values) const {
  for (int64_t v : values)
    if (ring_.is_zero(v)) throw ZeroAssignment("evaluation point must avoid zero");
  int64_t acc = ring_.zero();
  for (auto& [m, c] : terms_) {
    if (m.t) throw Error("cannot evaluate a polynomial still carrying t");
    int64_t prod = c;
    for (int i = 0; i < nvars_; ++i)
      if (m.e[i]) prod = ring_.mul(prod, ring_.pow(values[i], m.e[i]));
    acc = ring_.add(acc, prod);
  }
  return acc;
}

std::string format_term(const Ring& ring, const Mono& m, int64_t c, bool leading,
                        const std::string& word_suffix) {
  bool negative = false;
  int64_t mag = c;
  if (ring.kind() == Ring::Kind::ZZ && c < 0) {
    negative = true;
    mag = -c;
  }
  std::ostringstream os;
  if (leading) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  std::vector<std::string> parts;
  if (mag != ring.one()) {
    std::string cs = ring.to_string(mag);
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    parts.push_back(cs);
  }
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (!m.e[i]) continue;
    std::string v = "e" + std::to_string(i + 1);
    if (m.e[i] != 1) v += "^" + std::to_string(m.e[i]);
    parts.push_back(v);
  }
  if (m.t) {
    std::string v = "t";
    if (m.t != 1) v += "^" + std::to_string(m.t);
    parts.push_back(v);
  }
  if (!word_suffix.empty()) parts.push_back(word_suffix);
  if (parts.empty()) parts.push_back("1");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "*";
    os << parts[i];
  }
  return os.str();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool leading = true;
  for (auto& [m, c] : terms_) {
    s += format_term(ring_, m, c, leading, "");
    leading = false;
  }
  return s;
}

}  // namespace cpg
