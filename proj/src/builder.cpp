#include "cpg/builder.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cpg/errors.hpp"

namespace cpg {

namespace {

Rat cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sgn(const Rat& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

// c is collinear with ab; does it lie on the closed segment?
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// do the closed segments [a,b] and [c,d] share any point?
bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c,
                    const Vec2& d) {
  int d1 = sgn(cross(c, d, a)), d2 = sgn(cross(c, d, b));
  int d3 = sgn(cross(a, b, c)), d4 = sgn(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

// counterclockwise order of nonzero directions, starting along positive x
bool ccw_less(const Vec2& a, const Vec2& b) {
  int ha = (a.y > 0 || (a.y == 0 && a.x > 0)) ? 0 : 1;
  int hb = (b.y > 0 || (b.y == 0 && b.x > 0)) ? 0 : 1;
  if (ha != hb) return ha < hb;
  return sgn(a.x * b.y - a.y * b.x) > 0;
}

// keep the part of a convex polygon on the left of the directed line t -> h
std::vector<Vec2> clip_left(const std::vector<Vec2>& poly, const Vec2& t,
                            const Vec2& h) {
  std::vector<Vec2> out;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    Rat da = cross(t, h, a), db = cross(t, h, b);
    if (da >= 0) out.push_back(a);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      Rat s = da / (da - db);
      out.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
    }
  }
  return out;
}

bool strictly_inside(const std::vector<Vec2>& poly, const Vec2& p) {
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i)
    if (cross(poly[i], poly[(i + 1) % n], p) <= 0) return false;
  return true;
}

}  // namespace

Garden build_garden(const CubicPlanarGraph& g, const std::vector<Vec2>& coords) {
  if (!g.has_orientation())
    throw Error("the graph carries no edge orientation");
  int nv = g.num_vertices(), ne = g.num_edges();
  if ((int)coords.size() != nv)
    throw Error("coordinate count does not match the vertex count");

  for (const Vec2& c : coords)
    if (!(c.x > -1 && c.x < 1 && c.y > -1 && c.y < 1))
      throw DegenerateEmbedding("vertex outside the open unit box");
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (coords[u].x == coords[v].x)
        throw DegenerateEmbedding("two vertices share an x coordinate");

  // straight segments rule out loops and parallel edges outright
  for (int e = 0; e < ne; ++e)
    if (g.is_loop(e))
      throw DegenerateEmbedding("a loop has no straight drawing");
  for (int e = 0; e < ne; ++e)
    for (int f = e + 1; f < ne; ++f) {
      auto [a, b] = g.endpoints(e);
      auto [c, d] = g.endpoints(f);
      if ((a == c && b == d) || (a == d && b == c))
        throw DegenerateEmbedding("parallel edges have no straight drawing");
    }

  // the drawing must induce the stored counterclockwise rotations
  for (int v = 0; v < nv; ++v) {
    const auto& rot = g.rotation(v);
    std::array<Vec2, 3> dir;
    for (int i = 0; i < 3; ++i) {
      int u = g.vertex_of(g.twin(rot[i]));
      dir[i] = {coords[u].x - coords[v].x, coords[u].y - coords[v].y};
    }
    for (int i = 0; i < 3; ++i) {
      const Vec2& p = dir[i];
      const Vec2& q = dir[(i + 1) % 3];
      if (sgn(p.x * q.y - p.y * q.x) == 0 && sgn(p.x * q.x + p.y * q.y) > 0)
        throw DegenerateEmbedding("two edges leave a vertex the same way");
    }
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return ccw_less(dir[i], dir[j]); });
    bool cyclic = false;
    for (int s = 0; s < 3 && !cyclic; ++s)
      cyclic = idx[s] == 0 && idx[(s + 1) % 3] == 1 && idx[(s + 2) % 3] == 2;
    if (!cyclic)
      throw DegenerateEmbedding("drawing disagrees with the rotation system");
  }

  // edges may meet only at shared endpoints (same-direction overlap at a
  // shared vertex is already excluded by the rotation step)
  for (int e = 0; e < ne; ++e) {
    auto [ea, eb] = g.endpoints(e);
    for (int f = e + 1; f < ne; ++f) {
      auto [fa, fb] = g.endpoints(f);
      if (ea == fa || ea == fb || eb == fa || eb == fb) continue;
      if (segments_touch(coords[ea], coords[eb], coords[fa], coords[fb]))
        throw DegenerateEmbedding("two edges cross in the drawing");
    }
  }

  Rat ymin = coords[0].y, ymax = coords[0].y;
  std::vector<Rat> used_x;
  for (const Vec2& c : coords) {
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
    used_x.push_back(c.x);
  }
  auto x_is_generic = [&](const Rat& x) {
    return std::find(used_x.begin(), used_x.end(), x) == used_x.end();
  };

  // one center per bounded face: the centroid of the face's kernel, nudged
  // in x until it avoids every vertex and every previously placed center
  int nb = g.num_bounded();
  std::vector<Vec2> center(nb + 1);
  for (int j = 1; j <= nb; ++j) {
    int f = g.face_of_bounded(j);
    std::vector<Vec2> ker = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    for (int h : g.face_halves(f)) {
      ker = clip_left(ker, coords[g.vertex_of(h)],
                      coords[g.vertex_of(g.twin(h))]);
      if (ker.empty()) break;
    }
    Rat a2 = 0;
    Vec2 csum{0, 0};
    for (size_t i = 0; i < ker.size(); ++i) {
      const Vec2& p = ker[i];
      const Vec2& q = ker[(i + 1) % ker.size()];
      Rat c = p.x * q.y - q.x * p.y;
      a2 += c;
      csum.x += (p.x + q.x) * c;
      csum.y += (p.y + q.y) * c;
    }
    if (ker.size() < 3 || a2 <= 0)
      throw NotStarShaped("face " + std::to_string(j) +
                          " is not star-shaped in this drawing");
    Vec2 c{csum.x / (3 * a2), csum.y / (3 * a2)};
    if (!x_is_generic(c.x)) {
      bool found = false;
      for (Rat q = 10; !found && q <= 1000000; q *= 10) {
        for (int k = 1; !found && Rat(k) < q; ++k) {
          for (int s : {1, -1}) {
            Vec2 cand{c.x + Rat(s * k) / q, c.y};
            if (x_is_generic(cand.x) && strictly_inside(ker, cand)) {
              c = cand;
              found = true;
              break;
            }
          }
        }
      }
      if (!found)
        throw Error("could not place a generic center in face " +
                    std::to_string(j));
    }
    center[j] = c;
    used_x.push_back(c.x);
  }

  // threads: corners of the bounded faces in walk order, then the exterior
  std::vector<Thread> threads;
  for (int j = 1; j <= nb; ++j)
    for (const Corner& c : g.face_corners(g.face_of_bounded(j)))
      threads.push_back({j, c.vertex, c.e_prev, c.e_next, c.e_opp});
  size_t ext_begin = threads.size();
  for (const Corner& c : g.face_corners(g.exterior_face()))
    threads.push_back({AT_INFINITY, c.vertex, c.e_prev, c.e_next, c.e_opp});
  for (size_t i = ext_begin; i < threads.size(); ++i)
    for (size_t k = i + 1; k < threads.size(); ++k)
      if (threads[i].vertex == threads[k].vertex)
        throw DegenerateEmbedding("the exterior walk revisits a vertex");

  // exterior threads exit vertically away from the graph, then run to the
  // left wall below (or above) everything; the larger the vertex x, the
  // further out the wall run sits
  Rat mid = (ymin + ymax) / 2;
  std::vector<Rat> height(threads.size());
  std::vector<size_t> downs, ups;
  for (size_t i = ext_begin; i < threads.size(); ++i) {
    int v = threads[i].vertex;
    auto clear = [&](bool down) {
      Vec2 far{coords[v].x, down ? Rat(-2) : Rat(2)};
      for (int e = 0; e < ne; ++e) {
        auto [p, q] = g.endpoints(e);
        if (p == v || q == v) continue;
        if (segments_touch(coords[v], far, coords[p], coords[q])) return false;
      }
      return true;
    };
    bool prefer_down = coords[v].y < mid;
    bool down;
    if (clear(prefer_down)) {
      down = prefer_down;
    } else if (clear(!prefer_down)) {
      down = !prefer_down;
    } else {
      throw ExteriorRoutingFailure("no vertical exit from vertex " +
                                   std::to_string(v + 1));
    }
    (down ? downs : ups).push_back(i);
  }
  auto by_x = [&](size_t a, size_t b) {
    return coords[threads[a].vertex].x < coords[threads[b].vertex].x;
  };
  std::sort(downs.begin(), downs.end(), by_x);
  std::sort(ups.begin(), ups.end(), by_x);
  for (size_t i = 0; i < downs.size(); ++i)
    height[downs[i]] = ymin - Rat((int)i + 1);
  for (size_t i = 0; i < ups.size(); ++i)
    height[ups[i]] = ymax + Rat((int)i + 1);

  Garden out;
  out.heads.resize(ne);
  for (int e = 0; e < ne; ++e) out.heads[e] = g.head_half(e);
  out.threads = threads;
  out.tines.resize(nb);

  for (int j = 1; j <= nb; ++j) {
    const Rat& cx = center[j].x;
    std::vector<std::pair<Rat, TineEvent>> evs;
    auto cut = [&](const Vec2& a, const Vec2& b) {  // y where ab meets x = cx
      return a.y + (b.y - a.y) * (cx - a.x) / (b.x - a.x);
    };
    for (int e = 0; e < ne; ++e) {
      const Vec2& b = coords[g.head_vertex(e)];
      const Vec2& a = coords[g.vertex_of(g.twin(g.head_half(e)))];
      if ((a.x < cx && cx < b.x) || (b.x < cx && cx < a.x))
        evs.push_back({cut(a, b), TineEvent::cross_edge(e, b.x > a.x)});
    }
    for (size_t i = 0; i < threads.size(); ++i) {
      const Thread& t = threads[i];
      if (t.face == j) continue;  // its own threads end on the tine
      if (t.face == AT_INFINITY) {
        if (cx < coords[t.vertex].x)
          evs.push_back({height[i], TineEvent::cross_thread((int)i, +1)});
      } else {
        const Vec2& a = center[t.face];
        const Vec2& b = coords[t.vertex];
        if ((a.x < cx && cx < b.x) || (b.x < cx && cx < a.x))
          evs.push_back(
              {cut(a, b), TineEvent::cross_thread((int)i, b.x > a.x ? 1 : -1)});
      }
    }
    evs.push_back({center[j].y, TineEvent::center(j)});
    std::sort(evs.begin(), evs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < evs.size(); ++i)
      if (evs[i].first == evs[i + 1].first)
        throw DegenerateEmbedding("two crossings at the same height on tine " +
                                  std::to_string(j));
    auto& tine = out.tines[j - 1];
    tine.reserve(evs.size());
    for (auto& [y, ev] : evs) tine.push_back(ev);
  }
  return out;
}

}  // namespace cpg
