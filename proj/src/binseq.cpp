#include "cpg/binseq.hpp"

#include <array>

namespace cpg {

LaurentPoly count_sequences(const Ring& ring, int nvars,
                            const std::vector<SeqEvent>& events, int a, int b) {
  // dp[bit] = sum of weight products of all partial sequences in that state
  LaurentPoly zero = LaurentPoly::constant(ring, nvars, 0);
  std::array<LaurentPoly, 2> dp = {zero, zero};
  dp[a] = LaurentPoly::constant(ring, nvars, 1);
  for (const SeqEvent& ev : events) {
    switch (ev.kind) {
      case SeqEvent::Kind::Edge: {
        LaurentPoly up =
            LaurentPoly::monomial(ring, nvars, ev.var, 1, ev.rightward ? 1 : -1);
        LaurentPoly down = LaurentPoly::monomial(ring, nvars, ev.var, -1,
                                                 ev.rightward ? -1 : 1);
        std::array<LaurentPoly, 2> next = {dp[1] * down, dp[0] * up};
        dp = next;
        break;
      }
      case SeqEvent::Kind::Thread:
        dp[1] = dp[1] + dp[0] * ev.weight;
        break;
      case SeqEvent::Kind::Center:
        dp[1] = dp[0];
        dp[0] = zero;
        break;
    }
  }
  return dp[b];
}

namespace {

int outward_count_under(const CubicPlanarGraph& g, const std::vector<int>& heads,
                        int v) {
  int r = 0;
  for (int h : g.rotation(v))
    if (heads[g.edge_of(h)] != h) ++r;
  return r;
}

}  // namespace

LaurentPoly thread_weight(const CubicPlanarGraph& g, const Garden& garden,
                          const Ring& ring, int thread_index) {
  const Thread& t = garden.threads[thread_index];
  int nvars = g.num_edges();
  int r = outward_count_under(g, garden.heads, t.vertex);
  Mono m;
  m.e.assign(nvars, 0);
  m.e[t.e_n] += 1;
  m.e[t.e_m] += 1;
  m.e[t.e_k] -= 1;
  return LaurentPoly::term(ring, nvars, m, r % 2 == 0 ? 1 : -1);
}

std::vector<SeqEvent> tine_events(const CubicPlanarGraph& g,
                                  const Garden& garden, const Ring& ring,
                                  int face_number) {
  std::vector<SeqEvent> events;
  for (const TineEvent& ev : garden.tine(face_number)) {
    switch (ev.kind) {
      case TineEvent::Kind::EdgeCross:
        events.push_back(SeqEvent::edge(ev.edge, ev.rightward));
        break;
      case TineEvent::Kind::ThreadCross:
        events.push_back(SeqEvent::thread(
            thread_weight(g, garden, ring, ev.thread).scaled(ev.sigma)));
        break;
      case TineEvent::Kind::Center:
        events.push_back(SeqEvent::center());
        break;
    }
  }
  return events;
}

DifferentialTable differential(const CubicPlanarGraph& g, const Garden& garden,
                               const Ring& ring) {
  validate_garden(g, garden);
  DifferentialTable table;
  table.ring = ring;
  table.nvars = g.num_edges();
  table.nfaces = g.num_bounded();

  for (int j = 1; j <= g.num_bounded(); ++j) {
    AlgebraElement df(ring, table.nvars);
    LaurentPoly sum = LaurentPoly::constant(ring, table.nvars, 0);
    for (size_t i = 0; i < garden.threads.size(); ++i)
      if (garden.threads[i].face == j)
        sum = sum + thread_weight(g, garden, ring, (int)i);
    df.add_term(Word{}, sum);
    table.images[gen::f(j)] = df;
  }

  AlgebraElement dx(ring, table.nvars), dy(ring, table.nvars),
      dz(ring, table.nvars);
  for (int j = 1; j <= g.num_bounded(); ++j) {
    auto events = tine_events(g, garden, ring, j);
    Word fj{{gen::f(j)}};
    dx.add_term(fj, count_sequences(ring, table.nvars, events, 1, 1));
    dy.add_term(fj, count_sequences(ring, table.nvars, events, 1, 0));
    dz.add_term(fj, count_sequences(ring, table.nvars, events, 0, 0));
  }
  table.images[gen::X] = dx;
  table.images[gen::Y] = dy;
  table.images[gen::Z] = dz;
  return table;
}

}  // namespace cpg
