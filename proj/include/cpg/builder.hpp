#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cpg/garden.hpp"
#include "cpg/graph.hpp"

namespace cpg {

using Rat = boost::multiprecision::cpp_rational;

struct Vec2 {
  Rat x, y;
  bool operator==(const Vec2&) const = default;
};

// Reads the decoration off a straight-line drawing of the graph. Vertices
// must lie in (-1,1)^2 with pairwise distinct x coordinates and the drawing's
// counterclockwise rotations must match the graph's. Every bounded face gets
// a vertical tine through a perturbed kernel point; threads of the exterior
// face leave their vertex vertically, away from the graph, then run to the
// left wall. The graph must carry an edge orientation.
Garden build_garden(const CubicPlanarGraph& g, const std::vector<Vec2>& coords);

}  // namespace cpg
