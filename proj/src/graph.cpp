#include "cpg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace cpg {

CubicPlanarGraph CubicPlanarGraph::build(std::vector<std::array<int, 3>> rotations,
                                         std::vector<int> twin,
                                         std::vector<int> orientation_heads,
                                         std::vector<int> exterior_hint,
                                         std::vector<std::vector<int>> bounded_hint) {
  CubicPlanarGraph g;
  g.rot_ = std::move(rotations);
  g.twin_ = std::move(twin);
  int V = g.num_vertices(), H = g.num_half_edges();
  if (V == 0) throw NonCubic("empty graph");
  if (H != 3 * V) throw BadPairing("pairing must list all 3|V| half-edges");

  for (int h = 0; h < H; ++h) {
    int t = g.twin_[h];
    if (t < 0 || t >= H || t == h) throw BadPairing("twin must be fixed-point-free");
    if (g.twin_[t] != h) throw BadPairing("twin must be an involution");
  }

  g.h2v_.assign(H, -1);
  for (int v = 0; v < V; ++v)
    for (int h : g.rot_[v]) {
      if (h < 0 || h >= H) throw NonCubic("rotation references a bad half-edge id");
      if (g.h2v_[h] != -1) throw NonCubic("half-edge listed at two vertices");
      g.h2v_[h] = v;
    }
  for (int h = 0; h < H; ++h)
    if (g.h2v_[h] == -1) throw NonCubic("half-edge missing from every rotation");

  // edge ids by ascending smaller half-edge of each twin pair
  g.h2e_.assign(H, -1);
  for (int h = 0; h < H; ++h)
    if (h < g.twin_[h]) g.e2h_.push_back(h);
  for (int e = 0; e < (int)g.e2h_.size(); ++e) {
    g.h2e_[g.e2h_[e]] = e;
    g.h2e_[g.twin_[g.e2h_[e]]] = e;
  }

  // connectivity over edges
  std::vector<char> seen(V, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : g.rot_[v]) {
      int w = g.h2v_[g.twin_[h]];
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Disconnected("graph is not connected");

  if (V % 2 != 0) throw EulerMismatch("a cubic graph needs an even vertex count");
  g.compute_faces(exterior_hint, bounded_hint);
  int E = g.num_edges(), F = g.num_faces();
  if (V - E + F != 2)
    throw EulerMismatch("rotation system is not planar: V-E+F = " +
                        std::to_string(V - E + F));

  if (!orientation_heads.empty()) g.set_orientation(std::move(orientation_heads));
  return g;
}

int CubicPlanarGraph::face_next(int h) const {
  int t = twin_[h];
  const auto& r = rot_[h2v_[t]];
  for (int i = 0; i < 3; ++i)
    if (r[i] == t) return r[(i + 2) % 3];
  return -1;  // unreachable on validated input
}

void CubicPlanarGraph::compute_faces(const std::vector<int>& exterior_hint,
                                     const std::vector<std::vector<int>>& bounded_hint) {
  int H = num_half_edges();
  h2f_.assign(H, -1);
  for (int h0 = 0; h0 < H; ++h0) {
    if (h2f_[h0] != -1) continue;
    int id = (int)faces_.size();
    faces_.emplace_back();
    int h = h0;
    do {
      h2f_[h] = id;
      faces_[id].push_back(h);
      h = face_next(h);
    } while (h != h0);
  }

  if (!exterior_hint.empty()) {
    std::set<int> want(exterior_hint.begin(), exterior_hint.end());
    exterior_ = -1;
    for (int f = 0; f < num_faces(); ++f) {
      std::set<int> got;
      for (int h : faces_[f]) got.insert(h2e_[h]);
      if (got == want) {
        if (exterior_ != -1) throw EulerMismatch("exterior hint matches two faces");
        exterior_ = f;
      }
    }
    if (exterior_ == -1) throw EulerMismatch("exterior hint matches no face");
  } else {
    // default: the longest walk, lowest id on ties
    exterior_ = 0;
    for (int f = 1; f < num_faces(); ++f)
      if (faces_[f].size() > faces_[exterior_].size()) exterior_ = f;
  }

  bounded_idx_.assign(num_faces(), 0);
  bounded_face_.assign(1, exterior_);  // slot 0 points back at the exterior
  if (bounded_hint.empty()) {
    for (int f = 0; f < num_faces(); ++f) {
      if (f == exterior_) continue;
      bounded_idx_[f] = (int)bounded_face_.size();
      bounded_face_.push_back(f);
    }
    return;
  }

  if ((int)bounded_hint.size() != num_faces() - 1)
    throw EulerMismatch("bounded face list must name every bounded face once");
  // edge lists compared with multiplicity: a face walk can repeat an edge
  auto key = [](std::vector<int> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  std::map<std::vector<int>, int> by_edges;
  for (int f = 0; f < num_faces(); ++f) {
    if (f == exterior_) continue;
    if (!by_edges.emplace(key(face_edges(f)), f).second)
      throw EulerMismatch("two bounded faces share an edge list; numbering hint is ambiguous");
  }
  std::vector<char> used(num_faces(), 0);
  for (int j = 0; j < (int)bounded_hint.size(); ++j) {
    auto it = by_edges.find(key(bounded_hint[j]));
    if (it == by_edges.end() || used[it->second])
      throw EulerMismatch("bounded face hint " + std::to_string(j + 1) +
                          " matches no unused face");
    used[it->second] = 1;
    bounded_idx_[it->second] = j + 1;
    bounded_face_.push_back(it->second);
  }
}

std::vector<int> CubicPlanarGraph::face_edges(int f) const {
  std::vector<int> e;
  e.reserve(faces_[f].size());
  for (int h : faces_[f]) e.push_back(h2e_[h]);
  return e;
}

std::vector<Corner> CubicPlanarGraph::face_corners(int f) const {
  const auto& walk = faces_[f];
  int n = (int)walk.size();
  std::vector<Corner> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    int h_in = walk[i];                // arrives at the corner vertex
    int h_out = walk[(i + 1) % n];     // leaves it
    Corner c;
    c.face = f;
    c.pos = i;
    c.vertex = h2v_[h_out];
    c.e_prev = h2e_[h_in];
    c.e_next = h2e_[h_out];
    int slot_in = twin_[h_in];
    for (int s : rot_[c.vertex])
      if (s != slot_in && s != h_out) c.e_opp = h2e_[s];
    out.push_back(c);
  }
  return out;
}

void CubicPlanarGraph::set_orientation(std::vector<int> heads) {
  if ((int)heads.size() != num_edges())
    throw Error("orientation must assign a head to every edge");
  for (int e = 0; e < num_edges(); ++e) {
    auto [h, t] = edge_halves(e);
    if (heads[e] != h && heads[e] != t)
      throw Error("orientation head of edge " + std::to_string(e + 1) +
                  " is not one of its half-edges");
  }
  head_ = std::move(heads);
}

int CubicPlanarGraph::outward_count(int v) const {
  int r = 0;
  for (int s : rot_[v])
    if (head_[h2e_[s]] != s) ++r;
  return r;
}

std::vector<std::pair<int, int>> CubicPlanarGraph::dual_edges() const {
  std::vector<std::pair<int, int>> d;
  d.reserve(num_edges());
  for (int e = 0; e < num_edges(); ++e) {
    auto [h, t] = edge_halves(e);
    d.emplace_back(h2f_[h], h2f_[t]);
  }
  return d;
}

std::vector<int> CubicPlanarGraph::find_bridges() const {
  int V = num_vertices();
  std::vector<int> disc(V, -1), low(V, 0);
  std::vector<int> bridges;
  int timer = 0;
  // iterative DFS carrying the edge we came in through
  struct Frame { int v, slot, in_edge; };
  for (int start = 0; start < V; ++start) {
    if (disc[start] != -1) continue;
    std::vector<Frame> st{{start, 0, -1}};
    disc[start] = low[start] = timer++;
    while (!st.empty()) {
      auto& fr = st.back();
      if (fr.slot < 3) {
        int h = rot_[fr.v][fr.slot++];
        int e = h2e_[h];
        int w = h2v_[twin_[h]];
        if (e == fr.in_edge || w == fr.v) continue;  // parent edge or loop
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          st.push_back({w, 0, e});
        } else {
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        st.pop_back();
        if (!st.empty()) {
          int p = st.back().v;
          low[p] = std::min(low[p], low[fr.v]);
          if (low[fr.v] > disc[p]) bridges.push_back(fr.in_edge);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

SpanningBasis CubicPlanarGraph::spanning_basis(int root) const {
  int V = num_vertices();
  if (root < 0 || root >= V) throw Error("basis root out of range");
  SpanningBasis b;
  b.root = root;

  int start = root == 0 ? 1 : 0;
  std::vector<char> seen(V, 0);
  seen[root] = 1;  // removed vertex
  seen[start] = 1;
  std::vector<int> queue{start};
  std::set<int> tree;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    // neighbors in ascending edge order for determinism
    std::array<int, 3> slots = rot_[v];
    std::sort(slots.begin(), slots.end(),
              [&](int a, int bslot) { return h2e_[a] < h2e_[bslot]; });
    for (int h : slots) {
      int w = h2v_[twin_[h]];
      if (w == root || w == v || seen[w]) continue;
      seen[w] = 1;
      tree.insert(h2e_[h]);
      queue.push_back(w);
    }
  }
  if ((int)queue.size() != V - 1)
    throw Disconnected("graph minus the root is not connected");

  b.tree_edges.assign(tree.begin(), tree.end());
  for (int e = 0; e < num_edges(); ++e)
    if (!tree.count(e)) b.nontree_edges.push_back(e);
  return b;
}

CubicPlanarGraph CubicPlanarGraph::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("bad graph JSON: ") + e.what());
  }
  try {
    std::vector<std::array<int, 3>> rot;
    for (auto& row : j.at("vertices")) {
      if (row.size() != 3) throw NonCubic("every vertex needs exactly 3 half-edges");
      rot.push_back({(int)row[0] - 1, (int)row[1] - 1, (int)row[2] - 1});
    }
    std::vector<int> twin;
    for (auto& t : j.at("pairing")) twin.push_back((int)t - 1);
    std::vector<int> heads;
    if (j.contains("orientation"))
      for (auto& h : j["orientation"]) heads.push_back((int)h - 1);
    std::vector<int> ext;
    if (j.contains("exterior"))
      for (auto& e : j["exterior"]) ext.push_back((int)e - 1);
    std::vector<std::vector<int>> bounded;
    if (j.contains("faces"))
      for (auto& row : j["faces"]) {
        std::vector<int> edges;
        for (auto& e : row) edges.push_back((int)e - 1);
        bounded.push_back(std::move(edges));
      }
    return build(std::move(rot), std::move(twin), std::move(heads), std::move(ext),
                 std::move(bounded));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad graph JSON: ") + e.what());
  }
}

std::string CubicPlanarGraph::to_json_string() const {
  nlohmann::json j;
  for (auto& r : rot_) j["vertices"].push_back({r[0] + 1, r[1] + 1, r[2] + 1});
  for (int t : twin_) j["pairing"].push_back(t + 1);
  if (has_orientation())
    for (int h : head_) j["orientation"].push_back(h + 1);
  std::set<int> ext;
  for (int h : faces_[exterior_]) ext.insert(h2e_[h] + 1);
  for (int e : ext) j["exterior"].push_back(e);
  for (int jf = 1; jf <= num_bounded(); ++jf) {
    nlohmann::json row = nlohmann::json::array();
    for (int e : face_edges(face_of_bounded(jf))) row.push_back(e + 1);
    j["faces"].push_back(row);
  }
  return j.dump(2);
}

}  // namespace cpg
