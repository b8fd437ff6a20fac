#pragma once

#include <cstdint>
#include <vector>

#include "cpg/algebra.hpp"
#include "cpg/graph.hpp"
#include "cpg/moves.hpp"
#include "cpg/ring.hpp"

namespace cpg {

// t-weight of each edge variable under one generator of the rank-(g+3)
// abelian symmetry: all ones for generator 0, the incidence vector of
// bounded face `which` otherwise. Throws BridgePresent when the graph has a
// bridge (it would sit on its face twice and the weights stop being 0/1).
std::vector<int> lattice_weights(const CubicPlanarGraph& g, int which);

// which = 0:      e_i -> t e_i,  f_j -> t f_j,  y -> t^-1 y,  x and z fixed.
// which = j >= 1: e_i -> t e_i on the edges of face j, f_j -> t^2 f_j,
//                 everything else fixed.
AlgebraMap lattice_generator(const CubicPlanarGraph& g, const Ring& ring,
                             int which);

// Change of basis attached to a spanning tree. A's rows follow the g+3
// non-tree edges in ascending order; column 0 is all ones and column j is
// incidence with bounded face j. The determinant is +-1 for every choice of
// root (SingularA otherwise), so the inverse is integral. The exponent
// tables express the action-invariant generators over the non-tree edges:
//   e_k -> e_k prod_r e_r^{B[k][r]}   (non-tree rows are -Id, so those
//                                      variables drop to 1)
//   f_j -> f_j prod_r e_r^{mu[j-1][r]}
//   y   -> y   prod_r e_r^{eta[r]}
struct VersalBasis {
  SpanningBasis tree;
  std::vector<std::vector<int64_t>> A;
  int64_t det = 0;
  std::vector<std::vector<int64_t>> Ainv;
  std::vector<std::vector<int64_t>> B;    // one row per edge
  std::vector<std::vector<int64_t>> mu;   // one row per bounded face
  std::vector<int64_t> eta;
};

VersalBasis versal_basis(const CubicPlanarGraph& g, int root);

// the substitution onto the action-invariant generators above
AlgebraMap hatted_map(const CubicPlanarGraph& g, const Ring& ring,
                      const VersalBasis& vb);

// the quotient that sets every non-tree edge variable to 1
AlgebraMap versal_quotient(const CubicPlanarGraph& g, const Ring& ring,
                           const SpanningBasis& tree);

// differential induced on the quotient: image(l) = Q(d l)
DifferentialTable tversal_table(const CubicPlanarGraph& g,
                                const DifferentialTable& table,
                                const SpanningBasis& tree);

// push an all-units point into the slice cut out by the quotient:
// lambda'_k = lambda_k prod_r lambda_r^{B[k][r]}; non-tree entries become 1
std::vector<int64_t> versal_project(const VersalBasis& vb, const Ring& field,
                                    const std::vector<int64_t>& lambda);

}  // namespace cpg
