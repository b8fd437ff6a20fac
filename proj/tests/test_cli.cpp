#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <string>
#include <vector>

#include "cpg/cli.hpp"
#include "cpg/fixtures.hpp"
#include "cpg/garden.hpp"
#include "doctest.h"
#include "json.hpp"

using cpg::cli_run;
using cpg::CliResult;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("fixture listing and dumps") {
  CliResult res = cli_run({"fixtures", "list"});
  CHECK(res.code == 0);
  for (const std::string& name : cpg::fixture_names())
    CHECK(contains(res.out, name + ":"));

  res = cli_run({"fixtures", "dump", "k4"});
  CHECK(res.code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["name"] == "k4");
  CHECK(doc["graph"]["vertices"].size() == 4);
  CHECK(doc.contains("garden"));
  CHECK(doc.contains("coords"));

  CHECK(cli_run({"fixtures", "dump", "no-such-graph"}).code == 2);
}

TEST_CASE("face walks") {
  CliResult res = cli_run({"faces", "--fixture", "k4"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "4 vertices, 6 edges, genus 1, 4 faces"));
  CHECK(contains(res.out, "f0 (exterior):"));
  for (int e = 1; e <= 6; ++e)
    CHECK(contains(res.out, "e" + std::to_string(e)));
}

TEST_CASE("differential output carries the published lines") {
  CliResult res = cli_run({"differential", "--fixture", "g1"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "ring zz"));
  CHECK(contains(res.out, "d(y) = -e1^-2*f1 + e3^-1*e4^-1*f2 - e6^-2*f3"));

  res = cli_run({"differential", "--fixture", "k4"});
  CHECK(contains(res.out, "d(x) = -e1^-1*e3^-1*e4*f1 + e4*e5^-1*e6^-1*f2"));
}

TEST_CASE("d2check across coefficient rings") {
  CliResult res = cli_run({"d2check", "--fixture", "g1"});
  CHECK(res.code == 0);
  CHECK(res.out == "d^2 = 0 over zz\n");

  res = cli_run({"d2check", "--fixture", "mod4prism", "--field", "fp:2"});
  CHECK(res.code == 0);
  CHECK(res.out == "d^2 = 0 over fp:2\n");

  res = cli_run({"d2check", "--fixture", "k4", "--field", "gf:2,2", "--json"});
  CHECK(res.code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["ring"] == "gf:2,2");
}

TEST_CASE("moves-check battery passes and is reproducible") {
  CliResult res = cli_run({"moves-check", "--fixture", "k4", "--seed", "11"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "triple point orientations: 8/8"));
  CHECK(contains(res.out, "orientation flips: 6/6"));
  CHECK(contains(res.out, "aligned tine pairs: 2"));
  CHECK(contains(res.out, "moves-check: all passed"));

  CliResult again = cli_run({"moves-check", "--fixture", "k4", "--seed", "11"});
  CHECK(again.out == res.out);
  CHECK(cli_run({"moves-check", "--fixture", "prism3"}).code == 0);
}

TEST_CASE("tversal prints the basis matrices and the quotient") {
  CliResult res = cli_run({"tversal", "--fixture", "k4", "--root", "0"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "root vertex: 0"));
  CHECK(contains(res.out, "A (rows = off-tree edges, det "));
  CHECK(contains(res.out, "A_T (rows = tree edges):"));
  CHECK(contains(res.out, "A_F (rows = bounded faces):"));
  CHECK(contains(res.out, "quotient differential over zz:"));
  CHECK(contains(res.out, "d(f1) = "));
}

TEST_CASE("augmentation counts with the fiber factor") {
  CliResult res = cli_run({"augcount", "--fixture", "k4", "--field", "fp:3"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "tree-slice augmentations: 1"));
  CHECK(contains(res.out, "full variety: 1 * (q-1)^4 = 16"));

  res = cli_run(
      {"augcount", "--fixture", "k4", "--field", "gf:2,2", "--json"});
  CHECK(res.code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["slice_count"] == 2);
  CHECK(doc["full_count"] == 2 * 81);

  CHECK(cli_run({"augcount", "--fixture", "k4"}).code == 2);  // zz refused
}

TEST_CASE("chromatic polynomial of the dual") {
  CliResult res = cli_run({"chromatic", "--fixture", "k4"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "chi(k) = k^4 - 6*k^3 + 11*k^2 - 6*k"));
  CHECK(contains(res.out, "chi(4) = 24"));

  res = cli_run({"chromatic", "--fixture", "dumbbell"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "chi(k) = 0"));
}

TEST_CASE("verify-theorem reports both sides") {
  CliResult res = cli_run({"verify-theorem", "--fixture", "k4", "--field",
                           "fp:3"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "chromatic side: chi(q+1) = 24"));
  CHECK(contains(res.out, "verified: 24 = 24 x 1"));

  res = cli_run({"verify-theorem", "--fixture", "prism4", "--field", "gf:2,2",
                 "--json"});
  CHECK(res.code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["chi_at_q_plus_1"] ==
        doc["factor"].get<int64_t>() * doc["aug_count"].get<int64_t>());
}

TEST_CASE("color-from-aug walks the correspondence") {
  CliResult res = cli_run({"color-from-aug", "--fixture", "k4", "--field",
                           "fp:3", "--index", "0"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "tree-slice point 0 of 1:"));
  CHECK(contains(res.out, "face colors:"));
  CHECK(contains(res.out, "=inf"));
  CHECK(contains(res.out, "roundtrip: ok"));

  res = cli_run({"color-from-aug", "--fixture", "k4", "--field", "fp:3",
                 "--index", "5"});
  CHECK(res.code == 2);
  CHECK(contains(res.out, "out of range"));
}

TEST_CASE("mu identities hold on the whole variety") {
  CliResult res = cli_run({"mu-identity", "--fixture", "g1", "--field",
                           "fp:3"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "mu-identity: all hold"));

  res = cli_run({"mu-identity", "--fixture", "k4", "--field", "gf:2,2",
                 "--json"});
  CHECK(res.code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["points"] == 2 * 81);
  CHECK(doc["edge_products_ok"] == doc["points"]);
}

TEST_CASE("graph and garden files load like fixtures") {
  auto fx = cpg::load_fixture("g1");
  {
    std::ofstream g("cli_test_graph.json", std::ios::binary);
    g << fx.graph.to_json_string();
    std::ofstream d("cli_test_garden.json", std::ios::binary);
    d << cpg::garden_to_json_string(fx.graph, *fx.garden);
  }
  CliResult res = cli_run({"d2check", "--graph", "cli_test_graph.json",
                           "--garden", "cli_test_garden.json"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "d^2 = 0"));

  CHECK(cli_run({"faces", "--graph", "cli_test_graph.json"}).code == 0);
  // a graph alone cannot feed garden-hungry commands
  CHECK(cli_run({"d2check", "--graph", "cli_test_graph.json"}).code == 2);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(cli_run({"faces", "--fixture", "no-such-graph"}).code == 2);
  CHECK(cli_run({"faces"}).code == 2);
  CHECK(cli_run({"no-such-command"}).code == 2);
  CHECK(cli_run({"augcount", "--fixture", "k4", "--field", "fp:9"}).code == 2);
  CHECK(cli_run({"d2check", "--graph", "missing-file.json"}).code == 2);
  CHECK(cli_run({}).code == 2);

  CliResult help = cli_run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "cpgraph"));
}
