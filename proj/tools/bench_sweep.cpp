// Times the OpenMP sweep kernels against the serial reference implementation
// and verifies that both produce bit-identical output.
//
//   topoheat_bench [nodes-per-axis]   (default 41)

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include <omp.h>

#include "topoheat/sweep.hpp"

using namespace topoheat;

namespace {

bool identical(const WorkMap& a, const WorkMap& b) {
  return std::memcmp(a.values.data(), b.values.data(),
                     a.values.size() * sizeof(double)) == 0 &&
         std::memcmp(a.signs.data(), b.signs.data(), a.signs.size()) == 0;
}

bool identical(const Curve& a, const Curve& b) {
  return std::memcmp(a.values.data(), b.values.data(),
                     a.values.size() * sizeof(double)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  const int steps = argc > 1 ? std::atoi(argv[1]) : 41;
  if (steps < 2) {
    std::fprintf(stderr, "usage: %s [nodes-per-axis >= 2]\n", argv[0]);
    return 1;
  }

  const MaterialParams material{30.0};
  const QuadratureSettings settings;
  const GridSpec grid{0.0, 40.0, steps};
  const int threads = omp_get_max_threads();

  std::printf("otto work map, %dx%d nodes, T = 40/30 K\n", steps, steps);

  double t0 = omp_get_wtime();
  const WorkMap serial =
      reference::otto_work_map_serial(grid, grid, 40.0, 30.0, material, settings);
  const double t_serial = omp_get_wtime() - t0;

  t0 = omp_get_wtime();
  const WorkMap parallel =
      otto_work_map(grid, grid, 40.0, 30.0, material, settings, threads);
  const double t_parallel = omp_get_wtime() - t0;

  std::printf("  serial            %8.3f s\n", t_serial);
  std::printf("  openmp (%2d thr)   %8.3f s   speedup %.2fx\n", threads,
              t_parallel, t_serial / t_parallel);
  std::printf("  bit-identical     %s\n", identical(serial, parallel) ? "yes" : "NO");

  std::printf("stirling work curve, %d nodes, T = 40/30 K, u_hot = 40 meV\n", steps);
  CycleSpec fixed{40.0, 30.0, 40.0, 0.0};
  const GridSpec axis{0.0, 40.0, steps};

  t0 = omp_get_wtime();
  const Curve curve_serial = reference::work_curve_serial(
      CycleKind::Stirling, fixed, SweepField::UCold, axis, material, settings);
  const double c_serial = omp_get_wtime() - t0;

  t0 = omp_get_wtime();
  const Curve curve_parallel =
      work_curve(CycleKind::Stirling, fixed, SweepField::UCold, axis, material,
                 settings, threads);
  const double c_parallel = omp_get_wtime() - t0;

  std::printf("  serial            %8.3f s\n", c_serial);
  std::printf("  openmp (%2d thr)   %8.3f s   speedup %.2fx\n", threads,
              c_parallel, c_serial / c_parallel);
  std::printf("  bit-identical     %s\n",
              identical(curve_serial, curve_parallel) ? "yes" : "NO");

  const bool ok = identical(serial, parallel) &&
                  identical(curve_serial, curve_parallel);
  return ok ? 0 : 1;
}
