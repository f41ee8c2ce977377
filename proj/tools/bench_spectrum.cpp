// Benchmark: parallel spectrum enumeration against the serial reference,
// plus a single-threaded curve-sampling baseline. Build with the default
// options and run directly; not registered as a test.

#include <chrono>
#include <cstdio>
#include <vector>

#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/geometry.hpp"
#include "ellipsoid/spectrum.hpp"
#include "ellipsoid/system.hpp"

#if defined(ELLIPSOID_HAVE_OPENMP)
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  using ellipsoid::SeparatedSystem;
  using ellipsoid::eigencurves::Backend;
  using ellipsoid::eigencurves::EigencurveId;
  using ellipsoid::eigencurves::Family;
  using ellipsoid::eigencurves::Solver;

  const double lambda_max = 40.0;
  const SeparatedSystem sys = SeparatedSystem::from_ellipsoid(
      ellipsoid::geometry::make_ellipsoid(3.0, 2.0, 1.0));

#if defined(ELLIPSOID_HAVE_OPENMP)
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif

  std::printf(
      "spectrum enumeration, axes (3, 2, 1), lambda_max = %g (%d hardware "
      "thread%s)\n",
      lambda_max, max_threads, max_threads == 1 ? "" : "s");
  std::printf("%-28s %10s %10s %8s\n", "variant", "entries", "time [s]",
              "speedup");

  // Fresh solvers per run so no variant inherits the caches of another.
  double serial_time = 0.0;
  {
    const Solver solver(sys);
    const auto start = Clock::now();
    const auto entries = ellipsoid::spectrum::enumerate_spectrum_serial(
        solver, lambda_max, Backend::Both);
    serial_time = seconds_since(start);
    std::printf("%-28s %10zu %10.3f %8s\n", "serial reference",
                entries.size(), serial_time, "1.00x");
  }

  // OpenMP happily oversubscribes, so run the parallel variants even on a
  // machine with fewer hardware threads; the speedup column simply reports
  // what the oversubscription costs there.
  int previous = 1;
  for (int threads : {2, 4, max_threads}) {
    if (threads <= previous) continue;
    previous = threads;
    const Solver solver(sys);
    const auto start = Clock::now();
    const auto entries = ellipsoid::spectrum::enumerate_spectrum(
        solver, lambda_max, Backend::Both, threads);
    const double elapsed = seconds_since(start);
    char label[64];
    std::snprintf(label, sizeof(label), "parallel, %d threads", threads);
    std::printf("%-28s %10zu %10.3f %7.2fx\n", label, entries.size(),
                elapsed, serial_time / elapsed);
  }

  std::printf("\ncurve sampling, lower family, 200 lambda values\n");
  {
    const Solver solver(sys);
    const EigencurveId id{Family::LowerH, 1,
                          ellipsoid::geometry::make_parity(0, 1, 0)};
    const auto start = Clock::now();
    double checksum = 0.0;
    for (int i = 0; i < 200; ++i) {
      checksum += solver.value(id, 0.05 * i, Backend::Galerkin);
    }
    std::printf("%-28s %10s %10.3f %8s (checksum %.6f)\n", "matrix backend",
                "200", seconds_since(start), "-", checksum);
  }
  return 0;
}
