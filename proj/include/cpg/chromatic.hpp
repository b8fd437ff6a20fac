#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

// Chromatic polynomial of a multigraph on vertices 0..n-1 by deletion and
// contraction, as coefficients of k^0..k^n. A loop makes it identically
// zero (returned as an empty vector); parallel edges collapse.
std::vector<int64_t> chromatic_polynomial(
    int n, const std::vector<std::pair<int, int>>& edges);

int64_t eval_poly(const std::vector<int64_t>& coeffs, int64_t k);

// Independent route: try all k^n color assignments. Small graphs only.
int64_t count_proper_colorings(int n,
                               const std::vector<std::pair<int, int>>& edges,
                               int64_t k);

// the dual puts one vertex on every face and one edge across every primal
// edge (a primal bridge becomes a loop)
std::vector<int64_t> dual_chromatic(const CubicPlanarGraph& g);

}  // namespace cpg
