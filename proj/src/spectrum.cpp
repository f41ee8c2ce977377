#include "ellipsoid/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/numerics.hpp"

#if defined(ELLIPSOID_HAVE_OPENMP)
#include <omp.h>
#endif

namespace ellipsoid::spectrum {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

using eigencurves::Backend;
using eigencurves::EigencurveId;
using eigencurves::Family;
using eigencurves::Solver;

EigencurveId lower_id(int n, const geometry::Parity& parity) {
  return {Family::LowerH, n, parity};
}

EigencurveId upper_id(int m, const geometry::Parity& parity) {
  return {Family::UpperH, m, parity};
}

}  // namespace

int sphere_degree(int m, int n, const geometry::Parity& parity) {
  if (m < 0 || n < 0) throw InvalidArgument("indices must be non-negative");
  return 2 * m + 2 * n + parity.weight();
}

double sphere_limit_eigenvalue(int m, int n, const geometry::Parity& parity) {
  const double l = static_cast<double>(sphere_degree(m, n, parity));
  return l * (l + 1.0);
}

namespace {

// Root of H_m - h_n for one curve backend, bracketed on [0, upper bound].
double crossing_lambda(const Solver& solver, int m, int n,
                       const geometry::Parity& parity, Backend backend) {
  const EigencurveId low = lower_id(n, parity);
  const EigencurveId up = upper_id(m, parity);
  const auto gap = [&](double lambda) {
    return solver.value(up, lambda, backend) -
           solver.value(low, lambda, backend);
  };

  const double c = solver.system().axis_c;
  const double base = static_cast<double>((2 * m + 2 * n + 3)) *
                      static_cast<double>((2 * m + 2 * n + 4));
  double hi = base / (c * c) + 1.0;

  double g_lo = gap(0.0);
  double g_hi = gap(hi);
  int doublings = 0;
  while (g_hi <= 0.0) {
    if (++doublings > 6) {
      throw NumericalError(
          "no sign change of H_m - h_n below lambda = " + std::to_string(hi));
    }
    hi *= 2.0;
    g_hi = gap(hi);
  }
  if (g_lo >= 0.0) {
    // Only the ground state of the all-even class starts at zero gap; any
    // other non-negative value at lambda = 0 signals a broken curve order.
    throw NumericalError("curve gap is not negative at lambda = 0");
  }
  return numerics::find_root(gap, {0.0, hi, g_lo, g_hi}, 1e-10);
}

}  // namespace

SpectrumEntry intersect(const Solver& solver, int m, int n,
                        const geometry::Parity& parity, Backend backend) {
  if (m < 0 || n < 0) throw InvalidArgument("indices must be non-negative");

  SpectrumEntry entry;
  entry.m = m;
  entry.n = n;
  entry.parity = parity;
  entry.sphere_l = sphere_degree(m, n, parity);
  entry.residual_galerkin = kNaN;
  entry.residual_prufer = kNaN;

  const bool ground_state =
      m == 0 && n == 0 && parity.weight() == 0;
  const Backend curve_backend =
      backend == Backend::Prufer ? Backend::Prufer : Backend::Galerkin;

  const double lambda =
      ground_state ? 0.0
                   : crossing_lambda(solver, m, n, parity, curve_backend);
  entry.lambda = lambda;
  entry.h = solver.value(lower_id(n, parity), lambda, curve_backend);

  if (curve_backend == Backend::Galerkin) {
    entry.residual_galerkin =
        solver.evaluate(lower_id(n, parity), lambda, Backend::Galerkin)
            .residual;
  }

  if (backend == Backend::Prufer) {
    entry.residual_prufer =
        std::abs(solver.value(upper_id(m, parity), lambda, Backend::Prufer) -
                 entry.h);
  } else if (backend == Backend::Both) {
    // Independent route: recompute both curves at the crossing by shooting
    // and convert the curve gap into a lambda discrepancy via the crossing
    // angle. The hint only seeds the shooting bracket.
    const double h_pr =
        solver.value(lower_id(n, parity), lambda, Backend::Prufer, entry.h);
    const double H_pr =
        solver.value(upper_id(m, parity), lambda, Backend::Prufer, entry.h);
    const double gap = std::abs(H_pr - h_pr);
    entry.residual_prufer = gap;

    const double slope_gap =
        solver.slope(upper_id(m, parity), lambda, Backend::Galerkin) -
        solver.slope(lower_id(n, parity), lambda, Backend::Galerkin);
    const double lambda_disagreement = gap / std::max(slope_gap, 1e-3);
    if (lambda_disagreement > 1e-6 * std::max(1.0, lambda)) {
      throw NumericalError(
          "matrix and shooting backends disagree at lambda = " +
          std::to_string(lambda) + " (estimated gap " +
          std::to_string(lambda_disagreement) + ")");
    }
  }
  return entry;
}

namespace {

// Lower bound on lambda(m, n, parity) used to prune the enumeration scan.
double enumeration_lower_bound(const Solver& solver, int m, int n,
                               const geometry::Parity& parity) {
  const double a = solver.system().axis_a;
  if (parity.kappa2 == 1) {
    return sphere_limit_eigenvalue(m, n, parity) / (a * a);
  }
  if (m >= 1 && n >= 1) {
    return sphere_limit_eigenvalue(m - 1, n - 1,
                                   parity.with_dirichlet_middle()) /
           (a * a);
  }
  return 0.0;
}

std::vector<SpectrumEntry> scan_parity(const Solver& solver,
                                       const geometry::Parity& parity,
                                       double lambda_max, Backend backend) {
  std::vector<SpectrumEntry> found;
  for (int m = 0;; ++m) {
    size_t row_start = found.size();
    for (int n = 0;; ++n) {
      if (enumeration_lower_bound(solver, m, n, parity) > lambda_max) break;
      SpectrumEntry entry = intersect(solver, m, n, parity, backend);
      if (entry.lambda > lambda_max) break;
      found.push_back(std::move(entry));
    }
    if (found.size() == row_start) break;  // whole row above the cutoff
  }
  return found;
}

std::vector<geometry::Parity> all_parities() {
  std::vector<geometry::Parity> parities;
  for (int bits = 0; bits < 8; ++bits) {
    parities.push_back(
        geometry::make_parity((bits >> 2) & 1, (bits >> 1) & 1, bits & 1));
  }
  return parities;
}

std::vector<SpectrumEntry> finalize(
    std::vector<std::vector<SpectrumEntry>> per_parity) {
  std::vector<SpectrumEntry> all;
  for (auto& block : per_parity) {
    all.insert(all.end(), block.begin(), block.end());
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const SpectrumEntry& x, const SpectrumEntry& y) {
                     return x.lambda < y.lambda;
                   });

  // Group near-coincident eigenvalues into multiplets, order each multiplet
  // deterministically, and stamp the multiplicity on every member.
  size_t start = 0;
  while (start < all.size()) {
    size_t stop = start + 1;
    while (stop < all.size() &&
           all[stop].lambda - all[stop - 1].lambda < 1e-9) {
      ++stop;
    }
    std::sort(all.begin() + static_cast<std::ptrdiff_t>(start),
              all.begin() + static_cast<std::ptrdiff_t>(stop),
              [](const SpectrumEntry& x, const SpectrumEntry& y) {
                return std::make_tuple(x.parity.weight(), x.parity.bits(),
                                       x.m, x.n) <
                       std::make_tuple(y.parity.weight(), y.parity.bits(),
                                       y.m, y.n);
              });
    for (size_t i = start; i < stop; ++i) {
      all[i].degeneracy = static_cast<int>(stop - start);
    }
    start = stop;
  }
  return all;
}

}  // namespace

std::vector<SpectrumEntry> enumerate_spectrum(const Solver& solver,
                                              double lambda_max,
                                              Backend backend, int threads) {
  if (!(lambda_max > 0.0)) {
    throw InvalidArgument("spectrum cutoff lambda_max must be positive");
  }
  const std::vector<geometry::Parity> parities = all_parities();
  std::vector<std::vector<SpectrumEntry>> per_parity(parities.size());
  std::vector<std::exception_ptr> errors(parities.size());

#if defined(ELLIPSOID_HAVE_OPENMP)
  const int requested = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(requested)
  for (int i = 0; i < static_cast<int>(parities.size()); ++i) {
    try {
      per_parity[static_cast<size_t>(i)] =
          scan_parity(solver, parities[static_cast<size_t>(i)], lambda_max,
                      backend);
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  }
#else
  (void)threads;
  for (size_t i = 0; i < parities.size(); ++i) {
    try {
      per_parity[i] = scan_parity(solver, parities[i], lambda_max, backend);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
#endif

  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return finalize(std::move(per_parity));
}

std::vector<SpectrumEntry> enumerate_spectrum_serial(const Solver& solver,
                                                     double lambda_max,
                                                     Backend backend) {
  if (!(lambda_max > 0.0)) {
    throw InvalidArgument("spectrum cutoff lambda_max must be positive");
  }
  std::vector<std::vector<SpectrumEntry>> per_parity;
  for (const geometry::Parity& parity : all_parities()) {
    per_parity.push_back(scan_parity(solver, parity, lambda_max, backend));
  }
  return finalize(std::move(per_parity));
}

std::vector<BoundCheck> validate_bounds(const Solver& solver,
                                        const SpectrumEntry& entry) {
  std::vector<BoundCheck> checks;
  const SeparatedSystem& sys = solver.system();
  const double a2 = sys.axis_a * sys.axis_a;
  const double c2 = sys.axis_c * sys.axis_c;
  const double big_lambda =
      sphere_limit_eigenvalue(entry.m, entry.n, entry.parity);

  if (sys.sphere_mode) {
    BoundCheck check;
    check.name = "sphere: lambda equals l(l+1)";
    check.lower = big_lambda - 1e-8;
    check.value = entry.lambda;
    check.upper = big_lambda + 1e-8;
    check.satisfied =
        check.lower <= entry.lambda && entry.lambda <= check.upper;
    checks.push_back(std::move(check));
    return checks;
  }

  if (entry.parity.kappa2 == 1) {
    BoundCheck check;
    check.name = "kappa2=1: Lambda/a^2 < lambda < Lambda/c^2";
    check.lower = big_lambda / a2;
    check.value = entry.lambda;
    check.upper = big_lambda / c2;
    check.satisfied =
        check.lower < entry.lambda && entry.lambda < check.upper;
    checks.push_back(std::move(check));
    return checks;
  }

  const geometry::Parity hat = entry.parity.with_dirichlet_middle();
  {
    BoundCheck check;
    check.name = "kappa2=0: lambda < Lambda_hat/c^2";
    check.lower = -kInf;
    check.value = entry.lambda;
    check.upper = sphere_limit_eigenvalue(entry.m, entry.n, hat) / c2;
    check.satisfied = entry.lambda < check.upper;
    checks.push_back(std::move(check));
  }
  if (entry.m >= 1 && entry.n >= 1) {
    BoundCheck check;
    check.name = "kappa2=0: Lambda_hat(m-1,n-1)/a^2 < lambda";
    check.lower = sphere_limit_eigenvalue(entry.m - 1, entry.n - 1, hat) / a2;
    check.value = entry.lambda;
    check.upper = kInf;
    check.satisfied = check.lower < entry.lambda;
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace ellipsoid::spectrum
