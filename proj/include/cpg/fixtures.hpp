#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpg/builder.hpp"
#include "cpg/garden.hpp"
#include "cpg/graph.hpp"

namespace cpg {

struct Fixture {
  std::string name;
  std::string summary;
  CubicPlanarGraph graph;
  // hand-written decoration, for graphs that cannot be drawn with straight
  // lines or whose decoration is pinned by regression data
  std::optional<Garden> garden;
  // exact straight-line drawing for build_garden, when one ships
  std::vector<Vec2> coords;
};

const std::vector<std::string>& fixture_names();
Fixture load_fixture(const std::string& name);

}  // namespace cpg
