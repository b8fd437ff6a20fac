#include "cpg/garden.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cpg/errors.hpp"
#include "json.hpp"

namespace cpg {
namespace {

using nlohmann::json;

// corner key for matching threads against the graph: (face number, vertex,
// sorted corner edges, opposite edge)
using CornerKey = std::tuple<int, int, int, int, int>;

CornerKey thread_key(const Thread& t) {
  return {t.face, t.vertex, std::min(t.e_n, t.e_m), std::max(t.e_n, t.e_m),
          t.e_k};
}

std::vector<CornerKey> graph_corner_keys(const CubicPlanarGraph& g) {
  std::vector<CornerKey> keys;
  for (int f = 0; f < g.num_faces(); ++f) {
    for (const Corner& c : g.face_corners(f)) {
      keys.push_back({g.bounded_index(f), c.vertex,
                      std::min(c.e_prev, c.e_next),
                      std::max(c.e_prev, c.e_next), c.e_opp});
    }
  }
  return keys;
}

}  // namespace

int Garden::find_thread(int face, int vertex) const {
  for (size_t i = 0; i < threads.size(); ++i)
    if (threads[i].face == face && threads[i].vertex == vertex)
      return static_cast<int>(i);
  return -1;
}

void validate_garden(const CubicPlanarGraph& g, const Garden& garden) {
  const int E = g.num_edges();
  if (static_cast<int>(garden.heads.size()) != E)
    throw Error("orientation size mismatch");
  for (int e = 0; e < E; ++e) {
    auto [h0, h1] = g.edge_halves(e);
    if (garden.heads[e] != h0 && garden.heads[e] != h1)
      throw Error("head half-edge " + std::to_string(garden.heads[e]) +
                  " does not belong to edge " + std::to_string(e));
  }

  auto expected = graph_corner_keys(g);
  std::vector<CornerKey> actual;
  for (const Thread& t : garden.threads) actual.push_back(thread_key(t));
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual)
    throw Error("threads do not match the graph's face corners");

  if (static_cast<int>(garden.tines.size()) != g.num_bounded())
    throw Error("expected one tine per bounded face");
  for (int j = 1; j <= g.num_bounded(); ++j) {
    int centers = 0;
    for (const TineEvent& ev : garden.tine(j)) {
      switch (ev.kind) {
        case TineEvent::Kind::EdgeCross:
          if (ev.edge < 0 || ev.edge >= E)
            throw Error("tine crosses unknown edge");
          break;
        case TineEvent::Kind::ThreadCross:
          if (ev.thread < 0 ||
              ev.thread >= static_cast<int>(garden.threads.size()))
            throw Error("tine crosses unknown thread");
          if (ev.sigma != 1 && ev.sigma != -1)
            throw Error("thread crossing sign must be +1 or -1");
          break;
        case TineEvent::Kind::Center:
          ++centers;
          if (ev.face != j)
            throw Error("tine of face " + std::to_string(j) +
                        " has center of face " + std::to_string(ev.face));
          break;
      }
    }
    if (centers != 1)
      throw Error("tine of face " + std::to_string(j) + " has " +
                  std::to_string(centers) + " centers, expected 1");
  }
}

Garden garden_from_json_string(const CubicPlanarGraph& g,
                               const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(std::string("bad garden json: ") + ex.what());
  }
  Garden garden;
  try {
    for (int h : j.at("orientation").get<std::vector<int>>())
      garden.heads.push_back(h - 1);
    for (const json& jt : j.at("threads")) {
      Thread t;
      t.face = jt.at("face").get<int>();
      t.vertex = jt.at("vertex").get<int>() - 1;
      t.e_n = jt.at("en").get<int>() - 1;
      t.e_m = jt.at("em").get<int>() - 1;
      t.e_k = jt.at("ek").get<int>() - 1;
      garden.threads.push_back(t);
    }
    garden.tines.resize(j.at("tines").size());
    for (const json& jt : j.at("tines")) {
      int face = jt.at("face").get<int>();
      if (face < 1 || face > static_cast<int>(garden.tines.size()))
        throw Error("tine face number out of range");
      std::vector<TineEvent>& events = garden.tines[face - 1];
      for (const json& je : jt.at("events")) {
        if (je.contains("e")) {
          std::string dir = je.at("dir").get<std::string>();
          if (dir != "R" && dir != "L") throw Error("edge direction must be R or L");
          events.push_back(
              TineEvent::cross_edge(je.at("e").get<int>() - 1, dir == "R"));
        } else if (je.contains("t")) {
          auto ref = je.at("t").get<std::vector<int>>();
          if (ref.size() != 2 && ref.size() != 3)
            throw Error("thread reference needs [face, vertex] or [face, vertex, n]");
          int face_ref = ref[0], vertex = ref[1] - 1;
          int want = ref.size() == 3 ? ref[2] : 1;
          int idx = -1, seen = 0;
          for (size_t i = 0; i < garden.threads.size(); ++i) {
            const Thread& t = garden.threads[i];
            if (t.face == face_ref && t.vertex == vertex && ++seen == want)
              idx = static_cast<int>(i);
          }
          if (idx < 0) throw Error("thread reference matches no thread");
          if (ref.size() == 2 && seen > 1)
            throw Error("ambiguous thread reference; add an occurrence index");
          events.push_back(TineEvent::cross_thread(idx, je.at("s").get<int>()));
        } else if (je.contains("c")) {
          events.push_back(TineEvent::center(je.at("c").get<int>()));
        } else {
          throw Error("tine event must be one of e/t/c");
        }
      }
    }
  } catch (const json::exception& ex) {
    throw Error(std::string("bad garden json: ") + ex.what());
  }
  validate_garden(g, garden);
  return garden;
}

std::string garden_to_json_string(const CubicPlanarGraph& g,
                                  const Garden& garden) {
  validate_garden(g, garden);
  json j;
  j["orientation"] = json::array();
  for (int h : garden.heads) j["orientation"].push_back(h + 1);
  j["threads"] = json::array();
  for (const Thread& t : garden.threads) {
    j["threads"].push_back({{"face", t.face},
                            {"vertex", t.vertex + 1},
                            {"en", t.e_n + 1},
                            {"em", t.e_m + 1},
                            {"ek", t.e_k + 1}});
  }
  j["tines"] = json::array();
  for (int face = 1; face <= static_cast<int>(garden.tines.size()); ++face) {
    json jt;
    jt["face"] = face;
    jt["events"] = json::array();
    for (const TineEvent& ev : garden.tine(face)) {
      switch (ev.kind) {
        case TineEvent::Kind::EdgeCross:
          jt["events"].push_back(
              {{"e", ev.edge + 1}, {"dir", ev.rightward ? "R" : "L"}});
          break;
        case TineEvent::Kind::ThreadCross: {
          const Thread& t = garden.threads[ev.thread];
          int seen = 0, total = 0;
          for (int i = 0; i < static_cast<int>(garden.threads.size()); ++i) {
            if (garden.threads[i].face != t.face ||
                garden.threads[i].vertex != t.vertex)
              continue;
            ++total;
            if (i <= ev.thread) ++seen;
          }
          // the occurrence index is only needed when (face, vertex) repeats
          if (total == 1)
            jt["events"].push_back(
                {{"t", {t.face, t.vertex + 1}}, {"s", ev.sigma}});
          else
            jt["events"].push_back(
                {{"t", {t.face, t.vertex + 1, seen}}, {"s", ev.sigma}});
          break;
        }
        case TineEvent::Kind::Center:
          jt["events"].push_back({{"c", ev.face}});
          break;
      }
    }
    j["tines"].push_back(jt);
  }
  return j.dump(2) + "\n";
}

}  // namespace cpg
