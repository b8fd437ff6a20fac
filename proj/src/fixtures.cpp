#include "cpg/fixtures.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "cpg/errors.hpp"
#include "json.hpp"

namespace cpg {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fixture from_file(const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(std::string(CPG_FIXTURE_DIR) + "/" + name + ".json"));
  } catch (const nlohmann::json::exception& ex) {
    throw Error("bad fixture " + name + ": " + ex.what());
  }
  Fixture fx;
  fx.name = name;
  fx.summary = j.value("summary", "");
  fx.graph = CubicPlanarGraph::from_json_string(j.at("graph").dump());
  if (j.contains("garden"))
    fx.garden = garden_from_json_string(fx.graph, j["garden"].dump());
  if (j.contains("coords")) {
    for (auto& row : j["coords"])
      fx.coords.push_back(
          {Rat(row[0].get<std::string>()), Rat(row[1].get<std::string>())});
    if ((int)fx.coords.size() != fx.graph.num_vertices())
      throw Error("fixture " + name + " needs one coordinate pair per vertex");
  }
  return fx;
}

std::vector<Vec2> prism_outer(int n) {
  switch (n) {
    case 3:
      return {{Rat(9, 10), Rat(-7, 10)}, {Rat(1, 10), Rat(4, 5)},
              {Rat(-9, 10), Rat(-3, 5)}};
    case 4:
      return {{Rat(4, 5), Rat(-7, 10)}, {Rat(7, 10), Rat(3, 5)},
              {Rat(-3, 5), Rat(4, 5)},  {Rat(-4, 5), Rat(-3, 5)}};
    case 5:
      return {{Rat(9, 10), Rat(-1, 5)}, {Rat(1, 2), Rat(17, 20)},
              {Rat(-2, 5), Rat(9, 10)}, {Rat(-9, 10), Rat(1, 10)},
              {Rat(-1, 5), Rat(-9, 10)}};
    case 6:
      return {{Rat(9, 10), Rat(-3, 10)}, {Rat(7, 10), Rat(13, 20)},
              {Rat(1, 10), Rat(9, 10)},  {Rat(-7, 10), Rat(7, 10)},
              {Rat(-9, 10), Rat(-1, 10)}, {Rat(-3, 10), Rat(-9, 10)}};
    default:
      throw Error("no prism fixture with " + std::to_string(n) + " sides");
  }
}

// n-gon prism: outer ring vertices 0..n-1 counterclockwise, inner ring
// n..2n-1. Edge 3j is the outer ring edge from o_j, 3j+1 the inner ring edge
// from i_j, 3j+2 the spoke o_j - i_j. The inner ring is the outer scaled
// toward the origin and nudged so all 2n x coordinates stay distinct.
Fixture make_prism(int n) {
  std::vector<std::array<int, 3>> rot(2 * n);
  std::vector<int> twin(6 * n), heads(3 * n);
  for (int j = 0; j < n; ++j) {
    int p = (j + n - 1) % n;  // previous ring index
    rot[j] = {6 * p + 1, 6 * j, 6 * j + 4};
    rot[n + j] = {6 * p + 3, 6 * j + 5, 6 * j + 2};
    for (int k = 0; k < 3; ++k) {
      twin[6 * j + 2 * k] = 6 * j + 2 * k + 1;
      twin[6 * j + 2 * k + 1] = 6 * j + 2 * k;
    }
    heads[3 * j] = 6 * j + 1;
    heads[3 * j + 1] = 6 * j + 3;
    heads[3 * j + 2] = 6 * j + 5;
  }

  std::vector<int> exterior;
  std::vector<int> inner_face;
  std::vector<std::vector<int>> bounded;
  for (int j = 0; j < n; ++j) {
    exterior.push_back(3 * j);
    inner_face.push_back(3 * j + 1);
    bounded.push_back({3 * j, 3 * j + 1, 3 * j + 2, 3 * ((j + 1) % n) + 2});
  }
  bounded.push_back(inner_face);

  Fixture fx;
  fx.name = "prism" + std::to_string(n);
  fx.summary = std::to_string(n) + "-gon prism, genus " + std::to_string(n - 1) +
               "; ships a drawing";
  fx.graph = CubicPlanarGraph::build(std::move(rot), std::move(twin),
                                     std::move(heads), std::move(exterior),
                                     std::move(bounded));
  std::vector<Vec2> outer = prism_outer(n);
  fx.coords = outer;
  for (int j = 0; j < n; ++j)
    fx.coords.push_back({outer[j].x * Rat(2, 5) + Rat(2 * j + 1, 100),
                         outer[j].y * Rat(2, 5)});
  return fx;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "k4", "g1", "mod4prism", "dumbbell", "prism3", "prism4", "prism5", "prism6"};
  return names;
}

Fixture load_fixture(const std::string& name) {
  const auto& names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error("unknown fixture " + name);
  if (name.rfind("prism", 0) == 0) return make_prism(name[5] - '0');
  return from_file(name);
}

}  // namespace cpg
