#include "cpg/coloring.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "cpg/errors.hpp"

namespace cpg {
namespace {

constexpr int64_t kUnset = -2;

// every projective color, finite values first in canonical order
std::vector<int64_t> all_colors(const Ring& field) {
  if (!field.is_field()) throw Error("projective colors need a finite field");
  std::vector<int64_t> colors = {0};
  for (int64_t u : field.units()) colors.push_back(u);
  colors.push_back(kInfinity);
  return colors;
}

// -(a-b)(c-d) / [(b-c)(d-a)] with the per-factor infinity rule: a single
// infinite operand turns its factor into a bare sign, which is the limit of
// the full expression. Undefined (nullopt) when a factor needs two infinite
// operands or the denominator vanishes.
std::optional<int64_t> cross_rho(const Ring& F, int64_t a, int64_t b,
                                 int64_t c, int64_t d) {
  auto fac = [&](int64_t x, int64_t y) -> std::optional<int64_t> {
    if (x == kInfinity && y == kInfinity) return std::nullopt;
    if (x == kInfinity) return F.from_int(1);
    if (y == kInfinity) return F.from_int(-1);
    return F.sub(x, y);
  };
  auto ab = fac(a, b), cd = fac(c, d), bc = fac(b, c), da = fac(d, a);
  if (!ab || !cd || !bc || !da) return std::nullopt;
  int64_t den = F.mul(*bc, *da);
  if (den == 0) return std::nullopt;
  return F.mul(F.from_int(-1), F.mul(F.mul(*ab, *cd), F.inv(den)));
}

std::vector<std::vector<Corner>> all_corners(const CubicPlanarGraph& g) {
  std::vector<std::vector<Corner>> corners;
  for (int f = 0; f < g.num_faces(); ++f) corners.push_back(g.face_corners(f));
  return corners;
}

// One cross-ratio relation per face walk step: positions i -> j of face A
// along their shared boundary edge, with B the third face at the first
// corner and D the third face at the second.
struct Rel {
  int A, i, j;
  int B, C, D;
};

std::vector<Rel> relations(const CubicPlanarGraph& g,
                           const std::vector<std::vector<Corner>>& corners) {
  auto dual = g.dual_edges();
  auto other = [&](int e, int f) {
    return dual[e].first == f ? dual[e].second : dual[e].first;
  };
  std::vector<Rel> rels;
  for (int A = 0; A < g.num_faces(); ++A) {
    int n = (int)corners[A].size();
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      const Corner& ci = corners[A][i];
      rels.push_back({A, i, j, other(ci.e_prev, A), other(ci.e_next, A),
                      other(corners[A][j].e_next, A)});
    }
  }
  return rels;
}

// the three faces around a vertex, ordered by bounded index; distinct
// exactly when no edge at v is a bridge
std::array<int, 3> faces_at(const CubicPlanarGraph& g, int v) {
  std::array<int, 3> fs;
  for (int s = 0; s < 3; ++s) fs[s] = g.face_of_half(g.rotation(v)[s]);
  std::sort(fs.begin(), fs.end(),
            [&](int a, int b) { return g.bounded_index(a) < g.bounded_index(b); });
  return fs;
}

std::array<int, 3> distinct_faces_at(const CubicPlanarGraph& g, int v) {
  std::array<int, 3> fs = faces_at(g, v);
  if (fs[0] == fs[1] || fs[1] == fs[2])
    throw PropagationClash("the root corner faces are not distinct");
  return fs;
}

int corner_at(const std::vector<Corner>& cs, int v, int e) {
  for (int i = 0; i < (int)cs.size(); ++i)
    if (cs[i].vertex == v && (cs[i].e_prev == e || cs[i].e_next == e))
      return i;
  return -1;
}

int64_t vertex_sign(const CubicPlanarGraph& g, const Ring& F, int v) {
  return F.from_int(g.outward_count(v) % 2 != 0 ? -1 : 1);
}

}  // namespace

bool is_proper_coloring(const CubicPlanarGraph& g, const FaceColoring& kappa) {
  if ((int)kappa.size() != g.num_faces()) return false;
  for (auto [a, b] : g.dual_edges())
    if (kappa[a] == kappa[b]) return false;
  return true;
}

int64_t count_projective_colorings(const CubicPlanarGraph& g,
                                   const Ring& field) {
  std::vector<int64_t> colors = all_colors(field);
  int nf = g.num_faces();
  std::vector<int> digit(nf, 0);
  FaceColoring kappa(nf, colors[0]);
  int64_t count = 0;
  for (;;) {
    if (is_proper_coloring(g, kappa)) ++count;
    int f = 0;
    while (f < nf && ++digit[f] == (int)colors.size()) digit[f++] = 0;
    if (f == nf) break;
    for (int i = 0; i <= f; ++i) kappa[i] = colors[digit[i]];
  }
  return count;
}

std::vector<FaceColoring> normalized_colorings(const CubicPlanarGraph& g,
                                               const Ring& field, int root) {
  std::vector<int64_t> colors = all_colors(field);
  std::array<int, 3> rf = faces_at(g, root);
  // two sides of a bridge at the root: nothing can be proper here
  if (rf[0] == rf[1] || rf[1] == rf[2]) return {};
  std::vector<int> rest;
  for (int f = 0; f < g.num_faces(); ++f)
    if (f != rf[0] && f != rf[1] && f != rf[2]) rest.push_back(f);

  FaceColoring kappa(g.num_faces(), colors[0]);
  kappa[rf[0]] = 0;
  kappa[rf[1]] = field.from_int(1);
  kappa[rf[2]] = kInfinity;

  std::vector<FaceColoring> out;
  std::vector<int> digit(rest.size(), 0);
  for (;;) {
    if (is_proper_coloring(g, kappa)) out.push_back(kappa);
    size_t f = 0;
    while (f < rest.size() && ++digit[f] == (int)colors.size()) digit[f++] = 0;
    if (f == rest.size()) break;
    for (size_t i = 0; i <= f; ++i) kappa[rest[i]] = colors[digit[i]];
  }
  return out;
}

FaceColoring normalize_coloring(const CubicPlanarGraph& g, const Ring& field,
                                const FaceColoring& kappa, int root) {
  if (!is_proper_coloring(g, kappa))
    throw PropagationClash("cannot normalize an improper coloring");
  std::array<int, 3> rf = distinct_faces_at(g, root);
  int64_t p = kappa[rf[0]], q = kappa[rf[1]], r = kappa[rf[2]];
  auto mob = [&](int64_t x) -> int64_t {
    if (p == kInfinity) {  // (q-r)/(x-r)
      if (x == kInfinity) return 0;
      if (x == r) return kInfinity;
      return field.mul(field.sub(q, r), field.inv(field.sub(x, r)));
    }
    if (q == kInfinity) {  // (x-p)/(x-r)
      if (x == kInfinity) return field.from_int(1);
      if (x == r) return kInfinity;
      return field.mul(field.sub(x, p), field.inv(field.sub(x, r)));
    }
    if (r == kInfinity) {  // (x-p)/(q-p)
      if (x == kInfinity) return kInfinity;
      return field.mul(field.sub(x, p), field.inv(field.sub(q, p)));
    }
    // (x-p)(q-r) / [(x-r)(q-p)]
    if (x == kInfinity)
      return field.mul(field.sub(q, r), field.inv(field.sub(q, p)));
    if (x == r) return kInfinity;
    return field.mul(field.mul(field.sub(x, p), field.sub(q, r)),
                     field.inv(field.mul(field.sub(x, r), field.sub(q, p))));
  };
  FaceColoring out(kappa.size());
  for (size_t f = 0; f < kappa.size(); ++f) out[f] = mob(kappa[f]);
  return out;
}

std::vector<std::vector<int64_t>> corner_weights(
    const CubicPlanarGraph& g, const Ring& field,
    const std::vector<int64_t>& lambda) {
  if ((int)lambda.size() != g.num_edges())
    throw Error("variety point has the wrong number of coordinates");
  std::vector<std::vector<int64_t>> H(g.num_faces());
  for (int f = 0; f < g.num_faces(); ++f)
    for (const Corner& c : g.face_corners(f))
      H[f].push_back(field.mul(
          vertex_sign(g, field, c.vertex),
          field.mul(lambda[c.e_prev],
                    field.mul(lambda[c.e_next], field.inv(lambda[c.e_opp])))));
  return H;
}

FaceColoring coloring_from_augmentation(const CubicPlanarGraph& g,
                                        const Ring& field,
                                        const std::vector<int64_t>& lambda,
                                        int root) {
  std::vector<std::vector<int64_t>> H = corner_weights(g, field, lambda);
  std::vector<std::vector<Corner>> corners = all_corners(g);
  std::vector<Rel> rels = relations(g, corners);
  std::vector<int64_t> colors = all_colors(field);

  FaceColoring kappa(g.num_faces(), kUnset);
  std::array<int, 3> rf = distinct_faces_at(g, root);
  kappa[rf[0]] = 0;
  kappa[rf[1]] = field.from_int(1);
  kappa[rf[2]] = kInfinity;

  bool progress = true;
  while (progress) {
    progress = false;
    for (const Rel& r : rels) {
      if (kappa[r.A] == kUnset || kappa[r.B] == kUnset ||
          kappa[r.C] == kUnset)
        continue;
      int64_t rho = field.mul(H[r.A][r.i], field.inv(H[r.A][r.j]));
      if (kappa[r.D] == kUnset) {
        int64_t found = kUnset;
        int hits = 0;
        for (int64_t cand : colors) {
          auto val = cross_rho(field, kappa[r.A], kappa[r.B], kappa[r.C], cand);
          if (val && *val == rho) {
            found = cand;
            ++hits;
          }
        }
        if (hits != 1)
          throw PropagationClash("no unique color solves a corner relation");
        kappa[r.D] = found;
        progress = true;
      } else {
        auto val =
            cross_rho(field, kappa[r.A], kappa[r.B], kappa[r.C], kappa[r.D]);
        if (!val || *val != rho)
          throw PropagationClash("corner relations disagree");
      }
    }
  }
  for (int64_t c : kappa)
    if (c == kUnset) throw PropagationClash("propagation left a face uncolored");
  if (!is_proper_coloring(g, kappa))
    throw PropagationClash("induced coloring is not proper");
  return kappa;
}

std::vector<int64_t> augmentation_from_coloring(const CubicPlanarGraph& g,
                                                const Ring& field,
                                                const FaceColoring& kappa,
                                                const SpanningBasis& tree) {
  if (!is_proper_coloring(g, kappa))
    throw PropagationClash("not a proper projective coloring");
  std::vector<std::vector<Corner>> corners = all_corners(g);
  std::vector<Rel> rels = relations(g, corners);

  // the fixed ratio H(i)/H(i+1) along every face walk step
  std::vector<std::vector<int64_t>> rho(g.num_faces());
  for (int f = 0; f < g.num_faces(); ++f) rho[f].assign(corners[f].size(), 0);
  for (const Rel& r : rels) {
    auto val = cross_rho(field, kappa[r.A], kappa[r.B], kappa[r.C], kappa[r.D]);
    if (!val || *val == 0)
      throw PropagationClash("coloring leaves a corner ratio undefined");
    rho[r.A][r.i] = *val;
  }

  std::vector<bool> nontree(g.num_edges(), false);
  for (int e : tree.nontree_edges) nontree[e] = true;

  std::vector<std::vector<int64_t>> H(g.num_faces());
  for (int f = 0; f < g.num_faces(); ++f) H[f].assign(corners[f].size(), kUnset);
  std::vector<bool> filled(g.num_faces(), false), queued(g.num_faces(), false);
  std::vector<int> queue;

  auto set_corner = [&](int f, int i, int64_t val) {
    if (H[f][i] == kUnset) {
      H[f][i] = val;
      if (!queued[f]) {
        queued[f] = true;
        queue.push_back(f);
      }
    } else if (H[f][i] != val) {
      throw PropagationClash("corner weights disagree during propagation");
    }
  };

  // every corner at the root is a bare sign: the root's edges are off the
  // tree, so their coordinates are 1
  for (int f = 0; f < g.num_faces(); ++f)
    for (int i = 0; i < (int)corners[f].size(); ++i)
      if (corners[f][i].vertex == tree.root)
        set_corner(f, i, vertex_sign(g, field, tree.root));

  for (size_t at = 0; at < queue.size(); ++at) {
    int f = queue[at];
    filled[f] = true;
    int n = (int)corners[f].size();
    int k = 0;
    while (H[f][k] == kUnset) ++k;
    for (int step = 1; step <= n; ++step) {
      int prev = (k + step - 1) % n, cur = (k + step) % n;
      set_corner(f, cur, field.mul(H[f][prev], field.inv(rho[f][prev])));
    }
    // hop across non-tree boundary edges: the two corner weights multiply
    // to the squared edge coordinate, which is 1 there
    for (int i = 0; i < n; ++i) {
      const Corner& c = corners[f][i];
      for (int e : {c.e_prev, c.e_next}) {
        if (!nontree[e]) continue;
        int other = g.dual_edges()[e].first == f ? g.dual_edges()[e].second
                                                 : g.dual_edges()[e].first;
        int j = corner_at(corners[other], c.vertex, e);
        if (j < 0) throw Error("no matching corner across an edge");
        set_corner(other, j, field.inv(H[f][i]));
      }
    }
  }
  for (int f = 0; f < g.num_faces(); ++f)
    for (int64_t h : H[f])
      if (h == kUnset) throw PropagationClash("corner propagation stalled");

  // peel tree leaves: at a leaf every other coordinate is known, so any
  // corner there determines the remaining one
  std::vector<int64_t> lam(g.num_edges(), kUnset);
  for (int e : tree.nontree_edges) lam[e] = field.from_int(1);
  std::vector<int> deg(g.num_vertices(), 0);
  for (int e : tree.tree_edges) {
    auto [u, v] = g.endpoints(e);
    ++deg[u];
    ++deg[v];
  }
  int remaining = (int)tree.tree_edges.size();
  while (remaining > 0) {
    int leaf = -1, u = -1;
    for (int v = 0; v < g.num_vertices() && leaf < 0; ++v) {
      if (deg[v] != 1) continue;
      for (int e : tree.tree_edges)
        if (lam[e] == kUnset) {
          auto [a, b] = g.endpoints(e);
          if (a == v || b == v) {
            leaf = v;
            u = e;
            break;
          }
        }
    }
    if (leaf < 0) throw Error("spanning tree peeling stalled");
    int cf = -1, ci = -1;
    for (int f = 0; f < g.num_faces() && cf < 0; ++f) {
      int i = corner_at(corners[f], leaf, u);
      if (i >= 0) {
        cf = f;
        ci = i;
      }
    }
    const Corner& c = corners[cf][ci];
    int64_t s = vertex_sign(g, field, leaf);
    int64_t h = H[cf][ci];
    if (c.e_opp == u)
      lam[u] = field.mul(s, field.mul(lam[c.e_prev],
                                      field.mul(lam[c.e_next], field.inv(h))));
    else if (c.e_prev == u)
      lam[u] = field.mul(s, field.mul(h, field.mul(lam[c.e_opp],
                                                   field.inv(lam[c.e_next]))));
    else
      lam[u] = field.mul(s, field.mul(h, field.mul(lam[c.e_opp],
                                                   field.inv(lam[c.e_prev]))));
    auto [a, b] = g.endpoints(u);
    --deg[a];
    --deg[b];
    --remaining;
  }

  if (corner_weights(g, field, lam) != H)
    throw PropagationClash("recovered point violates a corner relation");
  return lam;
}

std::vector<int64_t> affine_augmentation(const CubicPlanarGraph& g,
                                         const Ring& field,
                                         const FaceColoring& kappa,
                                         const VersalBasis& vb) {
  if (!is_proper_coloring(g, kappa))
    throw PropagationClash("not a proper projective coloring");
  FaceColoring affine = kappa;
  if (std::find(affine.begin(), affine.end(), kInfinity) != affine.end()) {
    std::set<int64_t> used(affine.begin(), affine.end());
    int64_t free_color = kUnset;
    for (int64_t c : all_colors(field))
      if (c != kInfinity && !used.count(c)) {
        free_color = c;
        break;
      }
    if (free_color == kUnset)
      throw NoFreeColor("every projective color is in use");
    // x -> 1/(x - c) moves the free color to infinity
    for (int64_t& x : affine)
      x = x == kInfinity ? 0 : field.inv(field.sub(x, free_color));
  }
  std::vector<int64_t> lam(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    int h = g.head_half(e);  // emanates from the head, so its twin points in
    lam[e] = field.sub(affine[g.face_of_half(g.twin(h))],
                       affine[g.face_of_half(h)]);
  }
  return versal_project(vb, field, lam);
}

MuReport check_mu_identities(const CubicPlanarGraph& g, const Ring& field,
                             const std::vector<int64_t>& lambda) {
  std::vector<std::vector<int64_t>> H = corner_weights(g, field, lambda);
  std::vector<std::vector<Corner>> corners = all_corners(g);
  auto dual = g.dual_edges();
  MuReport rep;
  rep.edge_products_ok = rep.face_sums_ok = rep.product_identity_ok = true;

  for (int e = 0; e < g.num_edges(); ++e) {
    int64_t nu = field.mul(lambda[e], lambda[e]);
    auto [fa, fb] = dual[e];
    auto [v, w] = g.endpoints(e);
    for (int x : {v, w}) {
      int ia = corner_at(corners[fa], x, e);
      int ib = corner_at(corners[fb], x, e);
      if (ia < 0 || ib < 0 || field.mul(H[fa][ia], H[fb][ib]) != nu)
        rep.edge_products_ok = false;
    }
  }
  for (int f = 0; f < g.num_faces(); ++f) {
    int64_t sum = 0;
    for (int64_t h : H[f]) sum = field.add(sum, h);
    if (sum != 0) rep.face_sums_ok = false;
  }
  int64_t lhs = field.from_int(1);
  for (int e = 0; e < g.num_edges(); ++e)
    lhs = field.mul(lhs, field.mul(lambda[e], lambda[e]));
  int64_t rhs = field.from_int((g.genus() + 1) % 2 != 0 ? -1 : 1);
  for (int f = 0; f < g.num_faces(); ++f)
    for (int64_t h : H[f]) rhs = field.mul(rhs, h);
  rep.product_identity_ok = lhs == rhs;
  return rep;
}

}  // namespace cpg
