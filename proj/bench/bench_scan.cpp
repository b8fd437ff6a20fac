// Benchmark for the unit-solution scan: OpenMP kernel vs the serial
// reference, on the tree-slice system of one fixture.
//
//   bench_scan [fixture] [field] [root]     (default: prism6 fp:5 0)

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cpg/augvar.hpp"
#include "cpg/binseq.hpp"
#include "cpg/builder.hpp"
#include "cpg/fixtures.hpp"
#include "cpg/invariant.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  std::string name = argc > 1 ? argv[1] : "prism6";
  std::string field_spec = argc > 2 ? argv[2] : "fp:5";
  int root = argc > 3 ? std::atoi(argv[3]) : 0;

  try {
    cpg::Fixture fx = cpg::load_fixture(name);
    cpg::Ring field = cpg::Ring::parse(field_spec);
    cpg::Garden garden =
        fx.garden ? *fx.garden : cpg::build_garden(fx.graph, fx.coords);
    cpg::SpanningBasis tree = fx.graph.spanning_basis(root);

    auto table = cpg::tversal_table(
        fx.graph, cpg::differential(fx.graph, garden, field), tree);
    auto eqs = cpg::augmentation_equations(table);
    std::vector<bool> free_vars(fx.graph.num_edges(), false);
    for (int e : tree.tree_edges) free_vars[e] = true;

    long double scan = 1;
    for (size_t i = 0; i < free_vars.size(); ++i)
      if (free_vars[i]) scan *= (long double)(field.size() - 1);
    std::printf("fixture %s, field %s, root %d: %zu equations, (q-1)^%zu = %.0Lf assignments\n",
                name.c_str(), field_spec.c_str(), root, eqs.size(),
                tree.tree_edges.size(), scan);

    auto t0 = Clock::now();
    int64_t serial = cpg::count_unit_solutions_serial(eqs, field, free_vars);
    double ts = seconds_since(t0);
    std::printf("serial:  %8.3f s   count %lld\n", ts, (long long)serial);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    t0 = Clock::now();
    int64_t parallel = cpg::count_unit_solutions(eqs, field, free_vars);
    double tp = seconds_since(t0);
    std::printf("openmp:  %8.3f s   count %lld   (%d threads)\n", tp,
                (long long)parallel, threads);

    if (serial != parallel) {
      std::printf("MISMATCH: %lld != %lld\n", (long long)serial,
                  (long long)parallel);
      return 1;
    }
    std::printf("speedup: %.2fx\n", tp > 0 ? ts / tp : 0.0);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
