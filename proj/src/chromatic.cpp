#include "cpg/chromatic.hpp"

#include <algorithm>
#include <set>

namespace cpg {
namespace {

std::vector<int64_t> chrom(int n, std::set<std::pair<int, int>> edges) {
  if (edges.empty()) {
    std::vector<int64_t> coeffs(n + 1, 0);
    coeffs[n] = 1;
    return coeffs;
  }
  auto [a, b] = *edges.begin();
  edges.erase(edges.begin());
  std::vector<int64_t> del = chrom(n, edges);

  // contract b into a; vertices above b shift down one slot
  std::set<std::pair<int, int>> merged;
  bool loop = false;
  for (auto [u, v] : edges) {
    if (u == b) u = a;
    if (v == b) v = a;
    if (u == v) {
      loop = true;
      break;
    }
    if (u > b) --u;
    if (v > b) --v;
    merged.insert(std::minmax(u, v));
  }
  if (!loop) {
    std::vector<int64_t> con = chrom(n - 1, std::move(merged));
    for (size_t i = 0; i < con.size(); ++i) del[i] -= con[i];
  }
  return del;
}

}  // namespace

std::vector<int64_t> chromatic_polynomial(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> simple;
  for (auto [a, b] : edges) {
    if (a == b) return {};
    simple.insert(std::minmax(a, b));
  }
  return chrom(n, std::move(simple));
}

int64_t eval_poly(const std::vector<int64_t>& coeffs, int64_t k) {
  int64_t v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * k + coeffs[i];
  return v;
}

int64_t count_proper_colorings(int n,
                               const std::vector<std::pair<int, int>>& edges,
                               int64_t k) {
  if (n == 0) return 1;
  if (k <= 0) return 0;
  std::vector<int64_t> color(n, 0);
  int64_t count = 0;
  for (;;) {
    bool proper = true;
    for (auto [a, b] : edges)
      if (color[a] == color[b]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    int v = 0;
    while (v < n && ++color[v] == k) color[v++] = 0;
    if (v == n) break;
  }
  return count;
}

std::vector<int64_t> dual_chromatic(const CubicPlanarGraph& g) {
  return chromatic_polynomial(g.num_faces(), g.dual_edges());
}

}  // namespace cpg
