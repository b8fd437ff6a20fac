#pragma once

#include <cstdint>
#include <vector>

#include "cpg/algebra.hpp"
#include "cpg/graph.hpp"
#include "cpg/ring.hpp"

namespace cpg {

// The scalar conditions an augmentation must satisfy: the differential of
// each degree-1 generator. (The degree-2 images impose nothing; their terms
// all carry degree-1 letters, which an augmentation kills anyway.)
std::vector<LaurentPoly> augmentation_equations(const DifferentialTable& table);

// Count assignments of units to the free variables (every other variable is
// pinned to 1) on which all equations vanish. The plain version fans the
// scan out over OpenMP threads when available; the serial one is the
// reference it is benchmarked and tested against.
int64_t count_unit_solutions(const std::vector<LaurentPoly>& eqs,
                             const Ring& field,
                             const std::vector<bool>& free_vars);
int64_t count_unit_solutions_serial(const std::vector<LaurentPoly>& eqs,
                                    const Ring& field,
                                    const std::vector<bool>& free_vars);

// The solutions themselves as full coordinate vectors, in odometer order
// over the free coordinates (lowest variable index cycling fastest).
std::vector<std::vector<int64_t>> enumerate_unit_solutions(
    const std::vector<LaurentPoly>& eqs, const Ring& field,
    const std::vector<bool>& free_vars);

// Augmentations on the tree slice: non-tree coordinates 1, tree coordinates
// scanned over all units of the table's ring. The table is taken as built
// (not yet quotiented); both helpers pass it through the quotient first.
int64_t tree_augmentation_count(const CubicPlanarGraph& g,
                                const DifferentialTable& table,
                                const SpanningBasis& tree);
std::vector<std::vector<int64_t>> tree_augmentations(
    const CubicPlanarGraph& g, const DifferentialTable& table,
    const SpanningBasis& tree);

}  // namespace cpg
