#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cpg/errors.hpp"

namespace cpg {

// Root vertex plus a BFS spanning tree of the graph minus the root. The tree
// has 2g edges; the g+3 remaining edges (including the three at the root) are
// the "non-tree" edges that the versal quotient sets to 1.
struct SpanningBasis {
  int root = 0;
  std::vector<int> tree_edges;     // ascending edge ids
  std::vector<int> nontree_edges;  // ascending edge ids
};

// A corner of a face walk: the visit of `vertex` between consecutive boundary
// edges e_prev, e_next; e_opp is the third edge slot at the vertex. All are
// edge ids (loops may repeat an id; the slot structure stays unambiguous).
struct Corner {
  int face = 0;
  int pos = 0;
  int vertex = 0;
  int e_prev = 0;
  int e_next = 0;
  int e_opp = 0;
};

// Connected cubic planar multigraph with a fixed combinatorial embedding:
// counterclockwise rotation of the three half-edges at each vertex plus the
// twin involution. Faces are the orbits of h -> ccw_prev(twin(h)), which
// walks the face lying on the LEFT of each half-edge. Edge i consists of the
// twin pair containing half-edge ids (2i, 2i+1) after ranking by the smaller
// member, so fixture files control the published edge numbering.
class CubicPlanarGraph {
 public:
  // Validates cubicity, the pairing, connectivity, and Euler's formula
  // (sphere embedding, |V| = 2g+2, |E| = 3g+3, g+3 faces). bounded_hint,
  // when given, fixes the bounded face numbering: entry j-1 is the edge set
  // of face j. Without it bounded faces are numbered in discovery order.
  static CubicPlanarGraph build(std::vector<std::array<int, 3>> rotations,
                                std::vector<int> twin,
                                std::vector<int> orientation_heads = {},
                                std::vector<int> exterior_hint = {},
                                std::vector<std::vector<int>> bounded_hint = {});
  static CubicPlanarGraph from_json_string(const std::string& text);
  std::string to_json_string() const;

  int num_vertices() const { return (int)rot_.size(); }
  int num_half_edges() const { return (int)twin_.size(); }
  int num_edges() const { return num_half_edges() / 2; }
  int genus() const { return num_vertices() / 2 - 1; }
  int num_faces() const { return (int)faces_.size(); }

  const std::array<int, 3>& rotation(int v) const { return rot_[v]; }
  int twin(int h) const { return twin_[h]; }
  int vertex_of(int h) const { return h2v_[h]; }
  int edge_of(int h) const { return h2e_[h]; }
  std::pair<int, int> edge_halves(int e) const { return {e2h_[e], twin_[e2h_[e]]}; }
  std::pair<int, int> endpoints(int e) const {
    return {h2v_[e2h_[e]], h2v_[twin_[e2h_[e]]]};
  }
  bool is_loop(int e) const { auto [u, v] = endpoints(e); return u == v; }

  int face_next(int h) const;  // ccw_prev of twin(h) in the head's rotation
  const std::vector<int>& face_halves(int f) const { return faces_[f]; }
  int face_of_half(int h) const { return h2f_[h]; }
  std::vector<int> face_edges(int f) const;  // with multiplicity along the walk
  std::vector<Corner> face_corners(int f) const;
  int exterior_face() const { return exterior_; }
  // bounded faces are numbered 1..g+2 in face-discovery order; 0 = exterior
  int bounded_index(int face) const { return bounded_idx_[face]; }
  int face_of_bounded(int j) const { return bounded_face_[j]; }
  int num_bounded() const { return (int)bounded_face_.size() - 1; }

  bool has_orientation() const { return !head_.empty(); }
  int head_half(int e) const { return head_[e]; }
  int head_vertex(int e) const { return h2v_[head_[e]]; }
  void set_orientation(std::vector<int> heads);
  // number of edge slots at v oriented away from it (a loop contributes one)
  int outward_count(int v) const;

  // per primal edge, the two incident faces (equal exactly for bridges)
  std::vector<std::pair<int, int>> dual_edges() const;
  std::vector<int> find_bridges() const;  // DFS lowpoint, embedding-free
  bool is_bridgeless() const { return find_bridges().empty(); }

  SpanningBasis spanning_basis(int root) const;

 private:
  std::vector<std::array<int, 3>> rot_;
  std::vector<int> twin_, h2v_, h2e_, e2h_, h2f_, head_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> bounded_idx_, bounded_face_;
  int exterior_ = -1;

  void compute_faces(const std::vector<int>& exterior_hint,
                     const std::vector<std::vector<int>>& bounded_hint);
};

}  // namespace cpg
