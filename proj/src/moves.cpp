#include "cpg/moves.hpp"

#include <sstream>

#include "cpg/errors.hpp"

namespace cpg {

AlgebraElement AlgebraMap::letter_image(int32_t letter) const {
  auto it = images.find(letter);
  if (it != images.end()) return it->second;
  return AlgebraElement::generator(ring, nvars, letter);
}

AlgebraElement AlgebraMap::apply(const AlgebraElement& elt) const {
  AlgebraElement out(ring, nvars);
  for (auto& [w, c] : elt.terms()) {
    AlgebraElement piece = AlgebraElement::scalar(coeff ? coeff(c) : c);
    for (int32_t letter : w.letters) piece = piece * letter_image(letter);
    out += piece;
  }
  return out;
}

bool differentials_commute(const DifferentialTable& before,
                           const DifferentialTable& after,
                           const AlgebraMap& phi) {
  std::vector<int32_t> letters;
  for (int j = 1; j <= before.nfaces; ++j) letters.push_back(gen::f(j));
  letters.push_back(gen::X);
  letters.push_back(gen::Y);
  letters.push_back(gen::Z);
  for (int32_t letter : letters) {
    AlgebraElement lhs = phi.apply(before.image(letter));
    AlgebraElement rhs = after.apply(phi.letter_image(letter));
    if (lhs != rhs) return false;
  }
  return true;
}

std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> thread_double_cross(
    const LaurentPoly& weight) {
  std::vector<SeqEvent> pair = {SeqEvent::thread(weight),
                                SeqEvent::thread(weight.scaled(-1))};
  return {std::vector<SeqEvent>{}, pair};
}

std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> edge_double_cross(
    int var, bool first_rightward) {
  std::vector<SeqEvent> pair = {SeqEvent::edge(var, first_rightward),
                                SeqEvent::edge(var, !first_rightward)};
  return {std::vector<SeqEvent>{}, pair};
}

std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> center_thread_slide(
    const LaurentPoly& weight, bool thread_below) {
  std::vector<SeqEvent> with;
  if (thread_below) {
    with = {SeqEvent::thread(weight), SeqEvent::center()};
  } else {
    with = {SeqEvent::center(), SeqEvent::thread(weight)};
  }
  return {std::vector<SeqEvent>{SeqEvent::center()}, with};
}

namespace {

LaurentPoly corner_product(const Ring& ring, int nvars, int a, int b, int c,
                           int64_t sign) {
  Mono m;
  m.e.assign(nvars, 0);
  m.e[a] += 1;
  m.e[b] += 1;
  m.e[c] -= 1;
  return LaurentPoly::term(ring, nvars, m, ring.from_int(sign));
}

}  // namespace

std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> triple_point_sides(
    const Ring& ring, int nvars, std::array<bool, 3> away) {
  int r_v = int(away[0]) + int(away[1]) + int(away[2]);
  int64_t sign = (r_v % 2 != 0) ? -1 : 1;
  // e1 and e3 leave the vertex leftward across the left path, e2 rightward
  // across the right path
  LaurentPoly tau13 = corner_product(ring, nvars, 0, 2, 1, sign);
  LaurentPoly tau12 = corner_product(ring, nvars, 0, 1, 2, sign);
  LaurentPoly tau23 = corner_product(ring, nvars, 1, 2, 0, sign);
  std::vector<SeqEvent> left = {SeqEvent::edge(0, !away[0]),
                                SeqEvent::thread(tau13),
                                SeqEvent::edge(2, !away[2])};
  std::vector<SeqEvent> right = {SeqEvent::thread(tau12.scaled(-1)),
                                 SeqEvent::edge(1, away[1]),
                                 SeqEvent::thread(tau23.scaled(-1))};
  return {left, right};
}

std::string triple_point_tables(const Ring& ring) {
  std::ostringstream os;
  for (int bits = 0; bits < 8; ++bits) {
    std::array<bool, 3> away = {(bits & 1) != 0, (bits & 2) != 0,
                                (bits & 4) != 0};
    os << "e1 " << (away[0] ? "out" : "in") << ", e2 "
       << (away[1] ? "out" : "in") << ", e3 " << (away[2] ? "out" : "in")
       << ":\n";
    auto [left, right] = triple_point_sides(ring, 3, away);
    for (int a = 0; a <= 1; ++a) {
      for (int b = 0; b <= 1; ++b) {
        LaurentPoly l = count_sequences(ring, 3, left, a, b);
        LaurentPoly r = count_sequences(ring, 3, right, a, b);
        os << "  (" << a << "," << b << "): left " << l.to_string()
           << "   right " << r.to_string() << "\n";
      }
    }
  }
  return os.str();
}

namespace {

struct TineGaps {
  std::vector<std::pair<int, bool>> edges;  // (edge, rightward) skeleton
  // per gap: thread crossings in order, and the center's offset among them
  // (-1 when the center is elsewhere)
  std::vector<std::vector<TineEvent>> threads;
  int center_gap = -1;
  int center_offset = -1;
};

TineGaps split_gaps(const std::vector<TineEvent>& tine) {
  TineGaps out;
  out.threads.emplace_back();
  for (const TineEvent& ev : tine) {
    switch (ev.kind) {
      case TineEvent::Kind::EdgeCross:
        out.edges.emplace_back(ev.edge, ev.rightward);
        out.threads.emplace_back();
        break;
      case TineEvent::Kind::ThreadCross:
        out.threads.back().push_back(ev);
        break;
      case TineEvent::Kind::Center:
        out.center_gap = int(out.threads.size()) - 1;
        out.center_offset = int(out.threads.back().size());
        break;
    }
  }
  return out;
}

bool same_crossing(const TineEvent& a, const TineEvent& b) {
  return a.thread == b.thread && a.sigma == b.sigma;
}

// crossings present in both gap lists, in their shared order
std::vector<TineEvent> common_crossings(const std::vector<TineEvent>& a,
                                        const std::vector<TineEvent>& b) {
  std::vector<bool> used(b.size(), false);
  std::vector<TineEvent> common;
  size_t cursor = 0;
  for (const TineEvent& ev : a) {
    for (size_t i = cursor; i < b.size(); ++i) {
      if (!used[i] && same_crossing(ev, b[i])) {
        used[i] = true;
        cursor = i + 1;
        common.push_back(ev);
        break;
      }
    }
  }
  return common;
}

// offset of the center among the common crossings of its gap
int center_offset_in_common(const std::vector<TineEvent>& own,
                            const std::vector<TineEvent>& common,
                            int offset_in_own) {
  std::vector<bool> used(own.size(), false);
  int shared_before = 0;
  size_t cursor = 0;
  for (const TineEvent& ev : common) {
    for (size_t i = cursor; i < own.size(); ++i) {
      if (!used[i] && same_crossing(ev, own[i])) {
        used[i] = true;
        cursor = i + 1;
        if (int(i) < offset_in_own) ++shared_before;
        break;
      }
    }
  }
  return shared_before;
}

}  // namespace

std::vector<SeqEvent> generalized_tine(const CubicPlanarGraph& g,
                                       const Garden& garden, const Ring& ring,
                                       int m, int n) {
  const TineGaps gm = split_gaps(garden.tine(m));
  const TineGaps gn = split_gaps(garden.tine(n));
  if (gm.edges != gn.edges)
    throw BadGeneralizedTine(
        "tines cross different edges; columns are not adjacent");
  if (gm.center_gap < 0 || gn.center_gap < 0)
    throw BadGeneralizedTine("tine without a center");

  std::vector<SeqEvent> out;
  auto weight_of = [&](const TineEvent& ev) {
    return thread_weight(g, garden, ring, ev.thread).scaled(ev.sigma);
  };
  for (size_t gap = 0; gap < gm.threads.size(); ++gap) {
    std::vector<TineEvent> common =
        common_crossings(gm.threads[gap], gn.threads[gap]);
    // the shared crossings must appear in the same order on both tines
    if (common != common_crossings(gn.threads[gap], gm.threads[gap]))
      throw BadGeneralizedTine("shared threads cross in different orders");
    int at_m = (int(gap) == gm.center_gap)
                   ? center_offset_in_common(gm.threads[gap], common,
                                             gm.center_offset)
                   : -1;
    int at_n = (int(gap) == gn.center_gap)
                   ? center_offset_in_common(gn.threads[gap], common,
                                             gn.center_offset)
                   : -1;
    for (int pos = 0; pos <= int(common.size()); ++pos) {
      if (pos == at_m) out.push_back(SeqEvent::center());
      if (pos == at_n) out.push_back(SeqEvent::center());
      if (pos < int(common.size()))
        out.push_back(SeqEvent::thread(weight_of(common[pos])));
    }
    if (gap < gm.edges.size())
      out.push_back(SeqEvent::edge(gm.edges[gap].first, gm.edges[gap].second));
  }
  return out;
}

AlgebraMap tine_switch_map(const CubicPlanarGraph& g, const Garden& garden,
                           const Ring& ring, int m, int n) {
  std::vector<SeqEvent> path = generalized_tine(g, garden, ring, m, n);
  int nvars = g.num_edges();
  LaurentPoly s11 = count_sequences(ring, nvars, path, 1, 1);
  LaurentPoly s10 = count_sequences(ring, nvars, path, 1, 0);
  LaurentPoly s00 = count_sequences(ring, nvars, path, 0, 0);

  AlgebraMap phi{ring, nvars, {}, nullptr};
  Word fmfn{{gen::f(m), gen::f(n)}};
  auto shifted = [&](int32_t letter, const LaurentPoly& s) {
    AlgebraElement img = AlgebraElement::generator(ring, nvars, letter);
    img.add_term(fmfn, s);
    return img;
  };
  phi.images[gen::X] = shifted(gen::X, s11);
  phi.images[gen::Y] = shifted(gen::Y, s10);
  phi.images[gen::Z] = shifted(gen::Z, s00);
  return phi;
}

Garden anchor_relocated(const CubicPlanarGraph& g, const Garden& garden,
                        int thread_index) {
  if (garden.threads[thread_index].face != AT_INFINITY)
    throw Error("anchor thread must belong to the exterior face");
  Garden out = garden;
  for (auto& tine : out.tines) {
    if (tine.empty() || tine.front().kind != TineEvent::Kind::ThreadCross ||
        tine.front().thread != thread_index || tine.front().sigma != 1)
      throw Error("anchor thread does not open every tine");
    tine.erase(tine.begin());
    tine.push_back(TineEvent::cross_thread(thread_index, 1));
  }
  return out;
}

AlgebraMap anchor_map(const CubicPlanarGraph& g, const Garden& garden,
                      const Ring& ring, int thread_index) {
  LaurentPoly h = thread_weight(g, garden, ring, thread_index);
  int nvars = g.num_edges();
  AlgebraElement x = AlgebraElement::generator(ring, nvars, gen::X);
  AlgebraElement y = AlgebraElement::generator(ring, nvars, gen::Y);
  AlgebraElement z = AlgebraElement::generator(ring, nvars, gen::Z);
  AlgebraMap phi{ring, nvars, {}, nullptr};
  phi.images[gen::X] = x - y.scaled(h);
  phi.images[gen::Z] = z + y.scaled(h);
  return phi;
}

Garden flip_edge_orientation(const CubicPlanarGraph& g, const Garden& garden,
                             int edge) {
  Garden out = garden;
  out.heads[edge] = g.twin(out.heads[edge]);
  for (auto& tine : out.tines)
    for (auto& ev : tine)
      if (ev.kind == TineEvent::Kind::EdgeCross && ev.edge == edge)
        ev.rightward = !ev.rightward;
  return out;
}

AlgebraMap flip_edge_map(const Ring& ring, int nvars, int edge) {
  AlgebraMap phi{ring, nvars, {}, nullptr};
  phi.coeff = [ring, nvars, edge](const LaurentPoly& p) {
    LaurentPoly out = LaurentPoly::constant(ring, nvars, 0);
    for (auto& [m, c] : p.terms())
      out.add_term(m, (m.e[edge] % 2 != 0) ? ring.neg(c) : c);
    return out;
  };
  return phi;
}

}  // namespace cpg
