#pragma once

#include <vector>

#include "cpg/algebra.hpp"
#include "cpg/garden.hpp"
#include "cpg/graph.hpp"
#include "cpg/laurent.hpp"
#include "cpg/ring.hpp"

namespace cpg {

// One crossing on a vertical path, listed bottom to top, abstracted away from
// any particular garden so the local move checks can feed in configurations
// directly. A binary sequence assigns a bit to every gap between crossings:
// edge crossings always flip the bit, thread crossings may switch 0 -> 1 at
// the price of the thread's signed weight, and the center requires bit 0 and
// flips it.
struct SeqEvent {
  enum class Kind { Edge, Thread, Center };
  Kind kind = Kind::Center;
  int var = -1;           // Edge: 0-based coefficient variable
  bool rightward = true;  // Edge: points rightward at the crossing?
  LaurentPoly weight;     // Thread: sigma * (-1)^{r_v} e_n e_m e_k^{-1}

  static SeqEvent edge(int var, bool rightward) {
    SeqEvent e;
    e.kind = Kind::Edge;
    e.var = var;
    e.rightward = rightward;
    return e;
  }
  static SeqEvent thread(LaurentPoly weight) {
    SeqEvent e;
    e.kind = Kind::Thread;
    e.weight = std::move(weight);
    return e;
  }
  static SeqEvent center() { return SeqEvent{}; }
};

// Sum of H(B) over sequences that start with bit a and end with bit b. An
// edge crossed 0 -> 1 contributes e (rightward) or -e (leftward); crossed
// 1 -> 0 it contributes -e^{-1} (rightward) or e^{-1} (leftward). Switched
// threads contribute their weight; centers contribute nothing.
LaurentPoly count_sequences(const Ring& ring, int nvars,
                            const std::vector<SeqEvent>& events, int a, int b);

// corner weight (-1)^{r_v} e_n e_m e_k^{-1}, r_v counted under the garden's
// orientation
LaurentPoly thread_weight(const CubicPlanarGraph& g, const Garden& garden,
                          const Ring& ring, int thread_index);

// the tine of bounded face j as abstract events, crossing signs folded into
// the thread weights
std::vector<SeqEvent> tine_events(const CubicPlanarGraph& g,
                                  const Garden& garden, const Ring& ring,
                                  int face_number);

// The differential of the full algebra: d f_j sums the corner weights of
// face j (no tine needed), while d x, d y, d z collect the (1,1), (1,0) and
// (0,0) sequence sums of every tine.
DifferentialTable differential(const CubicPlanarGraph& g, const Garden& garden,
                               const Ring& ring);

}  // namespace cpg
