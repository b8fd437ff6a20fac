#include "cpg/algebra.hpp"

#include <sstream>

namespace cpg {

int letter_degree(int32_t letter) { return letter >= gen::X ? 2 : 1; }

std::string letter_name(int32_t letter) {
  switch (letter) {
    case gen::X: return "x";
    case gen::Y: return "y";
    case gen::Z: return "z";
    default: return "f" + std::to_string(letter);
  }
}

int Word::degree() const {
  int d = 0;
  for (int32_t l : letters) d += letter_degree(l);
  return d;
}

bool Word::operator<(const Word& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  return letters < o.letters;
}

std::string Word::to_string() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += "*";
    s += letter_name(letters[i]);
  }
  return s;
}

AlgebraElement AlgebraElement::scalar(LaurentPoly c) {
  AlgebraElement r(c.ring(), c.nvars());
  r.add_term(Word{}, std::move(c));
  return r;
}

AlgebraElement AlgebraElement::generator(Ring ring, int nvars, int32_t letter) {
  AlgebraElement r(ring, nvars);
  r.add_term(Word{{letter}}, LaurentPoly::constant(ring, nvars, 1));
  return r;
}

void AlgebraElement::add_term(Word w, LaurentPoly c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(ring_, nvars_);
  for (auto& [w, c] : terms_) r.add_term(w, -c);
  return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  AlgebraElement r(ring_, nvars_);
  for (auto& [w1, c1] : terms_)
    for (auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
      r.add_term(std::move(w), c1 * c2);
    }
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

AlgebraElement AlgebraElement::scaled(const LaurentPoly& c) const {
  AlgebraElement r(ring_, nvars_);
  for (auto& [w, p] : terms_) r.add_term(w, p * c);
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool leading = true;
  for (auto& [w, poly] : terms_) {
    std::string suffix = w.to_string();
    for (auto& [m, c] : poly.terms()) {
      s += format_term(ring_, m, c, leading, suffix);
      leading = false;
    }
  }
  return s;
}

AlgebraElement DifferentialTable::apply(const AlgebraElement& elt) const {
  AlgebraElement out(ring, nvars);
  for (auto& [w, coeff] : elt.terms()) {
    // Leibniz over the letters; the coefficient is degree 0 and passes through
    int sign_deg = 0;
    for (size_t i = 0; i < w.letters.size(); ++i) {
      const AlgebraElement& img = images.at(w.letters[i]);
      bool negate = sign_deg % 2 != 0;
      for (auto& [u, d] : img.terms()) {
        Word nw;
        nw.letters.reserve(w.letters.size() - 1 + u.letters.size());
        nw.letters.assign(w.letters.begin(), w.letters.begin() + i);
        nw.letters.insert(nw.letters.end(), u.letters.begin(), u.letters.end());
        nw.letters.insert(nw.letters.end(), w.letters.begin() + i + 1, w.letters.end());
        LaurentPoly nc = coeff * d;
        out.add_term(std::move(nw), negate ? -nc : nc);
      }
      sign_deg += letter_degree(w.letters[i]);
    }
  }
  return out;
}

std::string DifferentialTable::to_string() const {
  std::ostringstream os;
  std::vector<int32_t> order = {gen::X, gen::Y, gen::Z};
  for (int j = 1; j <= nfaces; ++j) order.push_back(gen::f(j));
  for (int32_t l : order)
    os << "d(" << letter_name(l) << ") = " << images.at(l).to_string() << "\n";
  return os.str();
}

DSquaredReport check_d_squared(const DifferentialTable& table) {
  DSquaredReport rep;
  for (auto& [letter, img] : table.images) {
    AlgebraElement dd = table.apply(img);
    if (!dd.is_zero()) {
      rep.ok = false;
      rep.witnesses.emplace_back(letter, std::move(dd));
    }
  }
  return rep;
}

}  // namespace cpg
