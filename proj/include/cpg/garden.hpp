#pragma once
#include <string>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

// Bounded faces are numbered 1..g+2 throughout; 0 stands for the exterior
// face, whose threads run to the left wall ("at infinity").
constexpr int AT_INFINITY = 0;

// Decoration of one face corner: an arc from the face's center (or from the
// left wall for the exterior) to `vertex`. e_n, e_m are the corner's two
// boundary edge slots and e_k the third edge at the vertex; together with the
// orientation they determine the thread weight (-1)^{r_v} e_n e_m e_k^{-1}.
struct Thread {
  int face = AT_INFINITY;  // bounded face number, or AT_INFINITY
  int vertex = 0;
  int e_n = 0, e_m = 0, e_k = 0;

  bool operator==(const Thread&) const = default;
};

// One crossing on a tine, listed bottom to top. A thread may cross the same
// tine more than once; each crossing carries its own sign. sigma is +1 when
// the thread, oriented toward its vertex, runs rightward where it meets the
// (upward) tine, and -1 when it runs leftward.
struct TineEvent {
  enum class Kind { EdgeCross, ThreadCross, Center };
  Kind kind = Kind::Center;
  int edge = -1;           // EdgeCross: 0-based edge id
  bool rightward = true;   // EdgeCross: does the edge point rightward here?
  int thread = -1;         // ThreadCross: index into Garden::threads
  int sigma = +1;          // ThreadCross: sign of this crossing
  int face = 0;            // Center: bounded face number

  static TineEvent cross_edge(int edge, bool rightward) {
    TineEvent e;
    e.kind = Kind::EdgeCross;
    e.edge = edge;
    e.rightward = rightward;
    return e;
  }
  static TineEvent cross_thread(int thread, int sigma) {
    TineEvent e;
    e.kind = Kind::ThreadCross;
    e.thread = thread;
    e.sigma = sigma;
    return e;
  }
  static TineEvent center(int face) {
    TineEvent e;
    e.kind = Kind::Center;
    e.face = face;
    return e;
  }
  bool operator==(const TineEvent& o) const {
    return kind == o.kind && edge == o.edge && rightward == o.rightward &&
           thread == o.thread && sigma == o.sigma && face == o.face;
  }
};

// The full decoration: edge orientation, one thread per corner of every face
// (exterior included), and one tine per bounded face.
struct Garden {
  std::vector<int> heads;                     // per-edge head half-edge
  std::vector<Thread> threads;
  std::vector<std::vector<TineEvent>> tines;  // index j-1 = tine of face j

  const std::vector<TineEvent>& tine(int face_number) const {
    return tines[face_number - 1];
  }
  // unique thread for (face number, vertex); -1 if absent
  int find_thread(int face, int vertex) const;

  bool operator==(const Garden&) const = default;
};

// Structural checks: orientation well-formed, exactly the right thread set
// (one per corner, weights matching the graph), one Center per tine naming
// its own face, thread references resolvable, crossing signs in {-1,+1}.
// Throws Error subtypes with specifics.
void validate_garden(const CubicPlanarGraph& g, const Garden& garden);

Garden garden_from_json_string(const CubicPlanarGraph& g, const std::string& text);
std::string garden_to_json_string(const CubicPlanarGraph& g, const Garden& garden);

}  // namespace cpg
