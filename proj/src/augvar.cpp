#include "cpg/augvar.hpp"

#include <cstdlib>

#include "cpg/errors.hpp"
#include "cpg/invariant.hpp"

namespace cpg {
namespace {

std::vector<int> free_indices(const std::vector<bool>& free_vars) {
  std::vector<int> idx;
  for (int i = 0; i < (int)free_vars.size(); ++i)
    if (free_vars[i]) idx.push_back(i);
  return idx;
}

uint64_t scan_size(size_t base, size_t digits) {
  uint64_t total = 1;
  for (size_t i = 0; i < digits; ++i) {
    if (total > (uint64_t)1 << 56) throw Error("unit scan too large");
    total *= base;
  }
  return total;
}

bool all_vanish(const std::vector<LaurentPoly>& eqs,
                const std::vector<int64_t>& values) {
  for (const LaurentPoly& eq : eqs)
    if (eq.eval(values) != 0) return false;
  return true;
}

// decode a flat scan index into the value vector (lowest index fastest)
void assign(uint64_t flat, const std::vector<int>& idx,
            const std::vector<int64_t>& units, std::vector<int64_t>& values) {
  for (int i : idx) {
    values[i] = units[flat % units.size()];
    flat /= units.size();
  }
}

}  // namespace

std::vector<LaurentPoly> augmentation_equations(const DifferentialTable& table) {
  std::vector<LaurentPoly> eqs;
  for (int j = 1; j <= table.nfaces; ++j) {
    LaurentPoly eq(table.ring, table.nvars);
    for (const auto& [w, c] : table.image(gen::f(j)).terms()) {
      if (!w.letters.empty())
        throw Error("differential of a degree-1 generator is not scalar");
      eq = eq + c;
    }
    eqs.push_back(eq);
  }
  return eqs;
}

int64_t count_unit_solutions_serial(const std::vector<LaurentPoly>& eqs,
                                    const Ring& field,
                                    const std::vector<bool>& free_vars) {
  std::vector<int64_t> units = field.units();
  std::vector<int> idx = free_indices(free_vars);
  uint64_t total = scan_size(units.size(), idx.size());
  std::vector<int64_t> values(free_vars.size(), field.from_int(1));
  int64_t count = 0;
  for (uint64_t flat = 0; flat < total; ++flat) {
    assign(flat, idx, units, values);
    if (all_vanish(eqs, values)) ++count;
  }
  return count;
}

int64_t count_unit_solutions(const std::vector<LaurentPoly>& eqs,
                             const Ring& field,
                             const std::vector<bool>& free_vars) {
  std::vector<int64_t> units = field.units();
  std::vector<int> idx = free_indices(free_vars);
  uint64_t total = scan_size(units.size(), idx.size());
  int64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    std::vector<int64_t> values(free_vars.size(), field.from_int(1));
#pragma omp for schedule(static)
    for (int64_t flat = 0; flat < (int64_t)total; ++flat) {
      assign((uint64_t)flat, idx, units, values);
      if (all_vanish(eqs, values)) ++count;
    }
  }
  return count;
}

std::vector<std::vector<int64_t>> enumerate_unit_solutions(
    const std::vector<LaurentPoly>& eqs, const Ring& field,
    const std::vector<bool>& free_vars) {
  std::vector<int64_t> units = field.units();
  std::vector<int> idx = free_indices(free_vars);
  uint64_t total = scan_size(units.size(), idx.size());
  std::vector<int64_t> values(free_vars.size(), field.from_int(1));
  std::vector<std::vector<int64_t>> out;
  for (uint64_t flat = 0; flat < total; ++flat) {
    assign(flat, idx, units, values);
    if (all_vanish(eqs, values)) out.push_back(values);
  }
  return out;
}

int64_t tree_augmentation_count(const CubicPlanarGraph& g,
                                const DifferentialTable& table,
                                const SpanningBasis& tree) {
  std::vector<LaurentPoly> eqs =
      augmentation_equations(tversal_table(g, table, tree));
  std::vector<bool> free_vars(table.nvars, false);
  for (int e : tree.tree_edges) free_vars[e] = true;
  return count_unit_solutions(eqs, table.ring, free_vars);
}

std::vector<std::vector<int64_t>> tree_augmentations(
    const CubicPlanarGraph& g, const DifferentialTable& table,
    const SpanningBasis& tree) {
  std::vector<LaurentPoly> eqs =
      augmentation_equations(tversal_table(g, table, tree));
  std::vector<bool> free_vars(table.nvars, false);
  for (int e : tree.tree_edges) free_vars[e] = true;
  return enumerate_unit_solutions(eqs, table.ring, free_vars);
}

}  // namespace cpg
