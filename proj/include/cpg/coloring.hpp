#pragma once

#include <cstdint>
#include <vector>

#include "cpg/graph.hpp"
#include "cpg/invariant.hpp"
#include "cpg/ring.hpp"

namespace cpg {

// Colors are points of the projective line over a finite field: a canonical
// field element, or infinity.
constexpr int64_t kInfinity = -1;
using FaceColoring = std::vector<int64_t>;  // indexed by face id

bool is_proper_coloring(const CubicPlanarGraph& g, const FaceColoring& kappa);

// brute-force count of proper colorings by all q+1 projective colors
int64_t count_projective_colorings(const CubicPlanarGraph& g,
                                   const Ring& field);

// Proper colorings with the three faces at `root` pinned to 0, 1, infinity
// in ascending bounded-index order (exterior first when present). A Mobius
// transformation fixing three points is the identity, so these are exactly
// one coloring per PGL2 orbit.
std::vector<FaceColoring> normalized_colorings(const CubicPlanarGraph& g,
                                               const Ring& field, int root);

// move kappa inside its PGL2 orbit to the normalized slice at root
FaceColoring normalize_coloring(const CubicPlanarGraph& g, const Ring& field,
                                const FaceColoring& kappa, int root);

// corner weights (-1)^{r_v} l_n l_m / l_k of a variety point, stored per
// face in walk order
std::vector<std::vector<int64_t>> corner_weights(
    const CubicPlanarGraph& g, const Ring& field,
    const std::vector<int64_t>& lambda);

// The coloring a variety point induces, normalized at root. Throws
// PropagationClash when the cross-ratio relations are inconsistent.
FaceColoring coloring_from_augmentation(const CubicPlanarGraph& g,
                                        const Ring& field,
                                        const std::vector<int64_t>& lambda,
                                        int root);

// the slice point a proper coloring induces (inverse of the above on the
// tree slice of the same root)
std::vector<int64_t> augmentation_from_coloring(const CubicPlanarGraph& g,
                                                const Ring& field,
                                                const FaceColoring& kappa,
                                                const SpanningBasis& tree);

// Second, affine route: move a free color to infinity, take the oriented
// difference of the two side faces along every edge, and project onto the
// slice. Throws NoFreeColor when every projective color is in use.
std::vector<int64_t> affine_augmentation(const CubicPlanarGraph& g,
                                         const Ring& field,
                                         const FaceColoring& kappa,
                                         const VersalBasis& vb);

// The corner values of a variety point satisfy: the two corner products
// across each edge agree (both give the squared edge coordinate), the
// corners of each face sum to zero, and the edge products multiply to
// (-1)^{g+1} times the product of all corner values.
struct MuReport {
  bool edge_products_ok = false;
  bool face_sums_ok = false;
  bool product_identity_ok = false;
  bool ok() const {
    return edge_products_ok && face_sums_ok && product_identity_ok;
  }
};
MuReport check_mu_identities(const CubicPlanarGraph& g, const Ring& field,
                             const std::vector<int64_t>& lambda);

}  // namespace cpg
