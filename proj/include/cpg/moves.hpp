#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cpg/algebra.hpp"
#include "cpg/binseq.hpp"
#include "cpg/garden.hpp"
#include "cpg/graph.hpp"
#include "cpg/ring.hpp"

namespace cpg {

// Algebra endomorphism: generator letters map through `images` (letters
// absent from the map stay fixed) and every coefficient maps through `coeff`
// (identity when unset). Used to express the chain maps that relate the
// differentials of two gardens for the same graph.
struct AlgebraMap {
  Ring ring;
  int nvars = 0;
  std::map<int32_t, AlgebraElement> images;
  std::function<LaurentPoly(const LaurentPoly&)> coeff;

  AlgebraElement letter_image(int32_t letter) const;
  AlgebraElement apply(const AlgebraElement& elt) const;
};

// true when after.apply(phi(g)) == phi(before.apply(g)) for every generator
bool differentials_commute(const DifferentialTable& before,
                           const DifferentialTable& after,
                           const AlgebraMap& phi);

// ---- local deformations, stated as event-list rewrites --------------------
// Each pair below has equal (a,b) sequence sums for all four (a,b) in any
// surrounding context, so splicing one side for the other never changes a
// differential. Test code splices them into random event lists.

// a thread crossing twice in a row with opposite signs ~ nothing
std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> thread_double_cross(
    const LaurentPoly& weight);

// an edge crossed twice in a row, there and back ~ nothing
std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> edge_double_cross(
    int var, bool first_rightward);

// a thread sliding past its own face's center (the switch is blocked on
// whichever side of the center it sits)
std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> center_thread_slide(
    const LaurentPoly& weight, bool thread_below);

// Triple point: a vertex with edge variables e1 (lower left), e2 (right),
// e3 (upper left) slides through the path. away[i] tells whether edge i+1 is
// oriented away from the vertex. Returns the crossing lists for the path
// passing left vs right of the vertex; vars 0,1,2 are the three edges.
std::pair<std::vector<SeqEvent>, std::vector<SeqEvent>> triple_point_sides(
    const Ring& ring, int nvars, std::array<bool, 3> away);

// All eight orientations of the triple point: one block per orientation with
// the four (a,b) sums of both sides laid out for inspection.
std::string triple_point_tables(const Ring& ring);

// ---- garden-level deformations ---------------------------------------------

// Path through the centers of bounded faces m and n whose tines run in
// adjacent columns: both tines must cross the same edges in the same order
// and directions; thread crossings shared by both (same thread, same sign,
// same gap between edge crossings) are kept. Throws BadGeneralizedTine when
// the tines do not line up.
std::vector<SeqEvent> generalized_tine(const CubicPlanarGraph& g,
                                       const Garden& garden, const Ring& ring,
                                       int m, int n);

// x -> x + S11 f_m f_n, y -> y + S10 f_m f_n, z -> z + S00 f_m f_n with the
// S the sequence sums of the generalized tine; intertwines the differentials
// before and after the two tines switch columns.
AlgebraMap tine_switch_map(const CubicPlanarGraph& g, const Garden& garden,
                           const Ring& ring, int m, int n);

// An exterior thread that opens every tine moves from first crossing to last.
// Throws Error unless the thread is the bottom event of every tine.
Garden anchor_relocated(const CubicPlanarGraph& g, const Garden& garden,
                        int thread_index);

// x -> x - H y, z -> z + H y with H the relocated thread's weight
AlgebraMap anchor_map(const CubicPlanarGraph& g, const Garden& garden,
                      const Ring& ring, int thread_index);

// Reverse one edge: the head moves to the other half and every crossing of
// the edge swaps direction. Threads are untouched (their weights pick up the
// sign through the orientation count).
Garden flip_edge_orientation(const CubicPlanarGraph& g, const Garden& garden,
                             int edge);

// e_edge -> -e_edge on every coefficient, generators fixed
AlgebraMap flip_edge_map(const Ring& ring, int nvars, int edge);

}  // namespace cpg
