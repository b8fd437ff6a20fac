#include "cpg/invariant.hpp"

#include <cstdlib>
#include <utility>

#include "cpg/errors.hpp"

namespace cpg {
namespace {

using Mat = std::vector<std::vector<int64_t>>;

// Bareiss fraction-free elimination; every division below is exact. Sizes
// stay at g+3 <= 8 with entries in {0,1,2}, far inside int64.
int64_t det_int(Mat m) {
  int n = (int)m.size();
  if (n == 0) return 1;
  int64_t prev = 1, sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n && p < 0; ++i)
        if (m[i][k] != 0) p = i;
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Mat adjugate(const Mat& m) {
  int n = (int)m.size();
  Mat adj(n, std::vector<int64_t>(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  Mat minor(n - 1, std::vector<int64_t>(n - 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      int64_t d = det_int(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

// column 0 all ones, column j incidence (with multiplicity) with face j
Mat incidence_rows(const CubicPlanarGraph& g) {
  int nb = g.num_bounded();
  Mat inc(g.num_edges(), std::vector<int64_t>(nb + 1, 0));
  for (auto& row : inc) row[0] = 1;
  for (int j = 1; j <= nb; ++j)
    for (int e : g.face_edges(g.face_of_bounded(j))) inc[e][j] += 1;
  return inc;
}

LaurentPoly unit_t(const Ring& ring, int nvars, int power) {
  return LaurentPoly::constant(ring, nvars, 1).times_t(power);
}

// the monomial prod_r e_{nontree[r]}^{exps[r]}
LaurentPoly nontree_monomial(const Ring& ring, int nvars,
                             const std::vector<int>& nontree,
                             const std::vector<int64_t>& exps) {
  Mono m;
  m.e.assign(nvars, 0);
  for (size_t r = 0; r < nontree.size(); ++r)
    m.e[nontree[r]] = (int16_t)exps[r];
  return LaurentPoly::term(ring, nvars, m, 1);
}

}  // namespace

std::vector<int> lattice_weights(const CubicPlanarGraph& g, int which) {
  if (!g.is_bridgeless())
    throw BridgePresent("lattice action needs a bridgeless graph");
  if (which == 0) return std::vector<int>(g.num_edges(), 1);
  std::vector<int> w(g.num_edges(), 0);
  for (int e : g.face_edges(g.face_of_bounded(which))) w[e] = 1;
  return w;
}

AlgebraMap lattice_generator(const CubicPlanarGraph& g, const Ring& ring,
                             int which) {
  std::vector<int> w = lattice_weights(g, which);
  int nvars = g.num_edges();
  AlgebraMap phi;
  phi.ring = ring;
  phi.nvars = nvars;
  phi.coeff = [w](const LaurentPoly& c) { return c.t_graded(w); };
  if (which == 0) {
    for (int j = 1; j <= g.num_bounded(); ++j)
      phi.images[gen::f(j)] =
          AlgebraElement::generator(ring, nvars, gen::f(j))
              .scaled(unit_t(ring, nvars, 1));
    phi.images[gen::Y] = AlgebraElement::generator(ring, nvars, gen::Y)
                             .scaled(unit_t(ring, nvars, -1));
  } else {
    phi.images[gen::f(which)] =
        AlgebraElement::generator(ring, nvars, gen::f(which))
            .scaled(unit_t(ring, nvars, 2));
  }
  return phi;
}

VersalBasis versal_basis(const CubicPlanarGraph& g, int root) {
  VersalBasis vb;
  vb.tree = g.spanning_basis(root);
  Mat inc = incidence_rows(g);
  int n = (int)vb.tree.nontree_edges.size();

  vb.A.reserve(n);
  for (int e : vb.tree.nontree_edges) vb.A.push_back(inc[e]);
  vb.det = det_int(vb.A);
  if (vb.det != 1 && vb.det != -1)
    throw SingularA("basis matrix for root " + std::to_string(root) +
                    " has determinant " + std::to_string(vb.det));
  // det = +-1, so 1/det = det and the adjugate gives the exact inverse
  vb.Ainv = adjugate(vb.A);
  for (auto& row : vb.Ainv)
    for (auto& x : row) x *= vb.det;

  auto times_ainv = [&](const std::vector<int64_t>& row) {
    std::vector<int64_t> out(n, 0);
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < n; ++k) out[c] += row[k] * vb.Ainv[k][c];
    return out;
  };

  // non-tree rows -Id (those variables drop to 1), tree rows -A_T A^-1
  vb.B.assign(g.num_edges(), std::vector<int64_t>(n, 0));
  for (int r = 0; r < n; ++r) vb.B[vb.tree.nontree_edges[r]][r] = -1;
  for (int e : vb.tree.tree_edges) {
    vb.B[e] = times_ainv(inc[e]);
    for (auto& x : vb.B[e]) x = -x;
  }

  // f_j carries t once under generator 0 and t^2 under its own face
  for (int j = 1; j <= g.num_bounded(); ++j) {
    std::vector<int64_t> row(n, 0);
    row[0] = 1;
    row[j] = 2;
    vb.mu.push_back(times_ainv(row));
    for (auto& x : vb.mu.back()) x = -x;
  }
  // y carries t^-1 under generator 0 only
  vb.eta = vb.Ainv[0];
  return vb;
}

AlgebraMap hatted_map(const CubicPlanarGraph& g, const Ring& ring,
                      const VersalBasis& vb) {
  int nvars = g.num_edges();
  const std::vector<int>& nontree = vb.tree.nontree_edges;
  int n = (int)nontree.size();
  AlgebraMap h;
  h.ring = ring;
  h.nvars = nvars;
  // e_k -> e_k prod_r e_r^{B[k][r]} on every monomial at once
  auto B = vb.B;
  h.coeff = [B, nontree, n, ring, nvars](const LaurentPoly& c) {
    LaurentPoly out(ring, nvars);
    for (auto& [m, coef] : c.terms()) {
      Mono m2 = m;
      for (int r = 0; r < n; ++r) {
        int64_t shift = 0;
        for (int k = 0; k < (int)m.e.size(); ++k) shift += m.e[k] * B[k][r];
        m2.e[nontree[r]] = (int16_t)(m2.e[nontree[r]] + shift);
      }
      out.add_term(m2, coef);
    }
    return out;
  };
  for (int j = 1; j <= g.num_bounded(); ++j)
    h.images[gen::f(j)] =
        AlgebraElement::generator(ring, nvars, gen::f(j))
            .scaled(nontree_monomial(ring, nvars, nontree, vb.mu[j - 1]));
  h.images[gen::Y] = AlgebraElement::generator(ring, nvars, gen::Y)
                         .scaled(nontree_monomial(ring, nvars, nontree, vb.eta));
  return h;
}

AlgebraMap versal_quotient(const CubicPlanarGraph& g, const Ring& ring,
                           const SpanningBasis& tree) {
  std::vector<bool> drop(g.num_edges(), false);
  for (int e : tree.nontree_edges) drop[e] = true;
  AlgebraMap q;
  q.ring = ring;
  q.nvars = g.num_edges();
  q.coeff = [drop](const LaurentPoly& c) { return c.substitute_one(drop); };
  return q;
}

DifferentialTable tversal_table(const CubicPlanarGraph& g,
                                const DifferentialTable& table,
                                const SpanningBasis& tree) {
  AlgebraMap q = versal_quotient(g, table.ring, tree);
  DifferentialTable out;
  out.ring = table.ring;
  out.nvars = table.nvars;
  out.nfaces = table.nfaces;
  for (auto& [letter, img] : table.images) out.images[letter] = q.apply(img);
  return out;
}

std::vector<int64_t> versal_project(const VersalBasis& vb, const Ring& field,
                                    const std::vector<int64_t>& lambda) {
  const std::vector<int>& nontree = vb.tree.nontree_edges;
  std::vector<int64_t> out(lambda.size());
  for (size_t k = 0; k < lambda.size(); ++k) {
    int64_t v = lambda[k];
    for (size_t r = 0; r < nontree.size(); ++r)
      v = field.mul(v, field.pow(lambda[nontree[r]], vb.B[k][r]));
    out[k] = v;
  }
  return out;
}

}  // namespace cpg
