#include "ellipsoid/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/galerkin.hpp"
#include "ellipsoid/geometry.hpp"
#include "ellipsoid/numerics.hpp"
#include "ellipsoid/spectrum.hpp"
#include "ellipsoid/sphere_perturbation.hpp"
#include "ellipsoid/system.hpp"

namespace ellipsoid::verification {

namespace {

using eigencurves::Backend;
using eigencurves::EigencurveId;
using eigencurves::Family;
using eigencurves::Solver;

constexpr double kPi = std::numbers::pi_v<double>;

geometry::Ellipsoid standard_ellipsoid() {
  return geometry::make_ellipsoid(3.0, 2.0, 1.0);
}

std::string format_brief(double value) {
  std::ostringstream stream;
  stream.precision(3);
  stream << value;
  return stream.str();
}

// --- criterion 1: the all-even quartet of the (3,2,1) ellipsoid ----------

CheckResult check_quartet() {
  CheckResult result{1, "all-even quartet of the (3,2,1) ellipsoid", false,
                     0.0, 1.0, ""};
  const auto start = std::chrono::steady_clock::now();

  const SeparatedSystem sys =
      SeparatedSystem::from_ellipsoid(standard_ellipsoid());
  const Solver solver(sys);
  const geometry::Parity parity = geometry::make_parity(0, 0, 0);

  struct Reference {
    int m, n;
    double lambda;
    double tolerance;
  };
  const Reference refs[] = {
      {0, 0, 0.0, 1e-9},
      {0, 1, 1.0744715882221367, 5e-6},
      {1, 0, 2.134154049349126, 5e-6},
      {1, 1, 5.029767692042633, 5e-6},
  };

  double worst_ratio = 0.0;
  std::ostringstream detail;
  for (const Reference& ref : refs) {
    const spectrum::SpectrumEntry entry =
        spectrum::intersect(solver, ref.m, ref.n, parity, Backend::Both);
    const double dev = std::abs(entry.lambda - ref.lambda);
    worst_ratio = std::max(worst_ratio, dev / ref.tolerance);
    detail << "(" << ref.m << "," << ref.n << ") dev=" << format_brief(dev)
           << " ";
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  worst_ratio = std::max(worst_ratio, wall / 10.0);
  detail << "wall=" << format_brief(wall) << "s";

  result.measured = worst_ratio;
  result.pass = worst_ratio <= 1.0;
  result.detail = detail.str();
  return result;
}

// --- criterion 2: pinned mixed-parity curve value, both backends ----------

CheckResult check_pinned_curve() {
  CheckResult result{2, "pinned h_0(5) with mixed ends, both backends",
                     false, 0.0, 5e-6, ""};
  const SeparatedSystem sys =
      SeparatedSystem::from_ellipsoid(standard_ellipsoid());
  const Solver solver(sys);
  const EigencurveId id{Family::LowerH, 0, geometry::make_parity(0, 1, 0)};
  const double reference = 0.5582158815195115;

  const double matrix = solver.value(id, 5.0, Backend::Galerkin);
  const double shooting = solver.value(id, 5.0, Backend::Prufer);
  result.measured = std::max(std::abs(matrix - reference),
                             std::abs(shooting - reference));
  result.pass = result.measured <= result.tolerance;
  std::ostringstream detail;
  detail << "matrix dev=" << format_brief(std::abs(matrix - reference))
         << " shooting dev="
         << format_brief(std::abs(shooting - reference));
  result.detail = detail.str();
  return result;
}

// --- criterion 3: sphere limit reproduces l(l+1) with full multiplets ----

CheckResult check_sphere_limit(int threads) {
  CheckResult result{3, "sphere spectra equal l(l+1) with 2l+1 multiplets",
                     false, 0.0, 1e-8, ""};
  double worst = 0.0;
  bool structure_ok = true;
  std::ostringstream detail;

  for (const double k2 : {0.3, 0.5, 0.7}) {
    const SeparatedSystem sys =
        SeparatedSystem::from_sphere_modulus(std::sqrt(k2));
    const Solver solver(sys);
    const std::vector<spectrum::SpectrumEntry> entries =
        spectrum::enumerate_spectrum(solver, 43.0, Backend::Galerkin,
                                     threads);
    if (entries.size() != 49) structure_ok = false;  // sum of 2l+1, l <= 6
    for (const spectrum::SpectrumEntry& entry : entries) {
      const double big_lambda = spectrum::sphere_limit_eigenvalue(
          entry.m, entry.n, entry.parity);
      worst = std::max(worst, std::abs(entry.lambda - big_lambda));
      if (entry.degeneracy != 2 * entry.sphere_l + 1) structure_ok = false;
    }
    detail << "k2=" << k2 << " count=" << entries.size() << " ";
  }

  result.measured = worst;
  result.pass = structure_ok && worst <= result.tolerance;
  detail << (structure_ok ? "multiplets ok" : "multiplet structure broken");
  result.detail = detail.str();
  return result;
}

// --- criterion 4: backend agreement across a curve grid -------------------

CheckResult check_backend_grid() {
  CheckResult result{4, "matrix vs shooting agreement on a 160-point grid",
                     false, 0.0, 1e-7, ""};
  const SeparatedSystem sys =
      SeparatedSystem::from_ellipsoid(standard_ellipsoid());
  const Solver solver(sys);

  double worst = 0.0;
  int points = 0;
  for (const Family family : {Family::LowerH, Family::UpperH}) {
    for (int left = 0; left <= 1; ++left) {
      for (int right = 0; right <= 1; ++right) {
        const geometry::Parity parity =
            family == Family::LowerH
                ? geometry::make_parity(left, right, 0)
                : geometry::make_parity(0, right, left);
        for (int index = 0; index <= 3; ++index) {
          const EigencurveId id{family, index, parity};
          for (const double lambda : {0.0, 1.0, 5.0, 10.0, 25.0}) {
            const double matrix =
                solver.value(id, lambda, Backend::Galerkin);
            const double shooting =
                solver.value(id, lambda, Backend::Prufer);
            worst = std::max(worst, std::abs(matrix - shooting));
            ++points;
          }
        }
      }
    }
  }

  result.measured = worst;
  result.pass = worst <= result.tolerance && points == 160;
  result.detail = "points=" + std::to_string(points);
  return result;
}

// --- criterion 5: curve slopes confined to their separation bands ---------

CheckResult check_slope_bands() {
  CheckResult result{5, "curve slopes inside (0,k^2) and (k^2,1)", false,
                     0.0, 0.0, ""};
  const SeparatedSystem sys =
      SeparatedSystem::from_ellipsoid(standard_ellipsoid());
  const Solver solver(sys);
  const double k2 = sys.modulus_k() * sys.modulus_k();

  double min_margin = std::numeric_limits<double>::infinity();
  for (int bits = 0; bits < 8; ++bits) {
    const geometry::Parity parity = geometry::make_parity(
        (bits >> 2) & 1, (bits >> 1) & 1, bits & 1);
    for (const Family family : {Family::LowerH, Family::UpperH}) {
      for (int index = 0; index <= 2; ++index) {
        const EigencurveId id{family, index, parity};
        for (const double lambda : {0.0, 2.0, 5.0, 10.0}) {
          const double slope =
              solver.slope(id, lambda, Backend::Galerkin);
          const double margin = family == Family::LowerH
                                    ? std::min(slope, k2 - slope)
                                    : std::min(slope - k2, 1.0 - slope);
          min_margin = std::min(min_margin, margin);
        }
      }
    }
  }

  // measured is the worst (smallest) margin; passing requires it positive.
  result.measured = min_margin;
  result.pass = min_margin > 0.0;
  result.detail = "min margin " + format_brief(min_margin) +
                  ", k^2=" + format_brief(k2);
  return result;
}

// --- criterion 6: lambda = 0 closed forms on both sides -------------------

CheckResult check_lambda_zero() {
  CheckResult result{6, "closed forms at lambda = 0, both backends", false,
                     0.0, 1.0, ""};
  const geometry::Ellipsoid e = standard_ellipsoid();
  const SeparatedSystem sys = SeparatedSystem::from_ellipsoid(e);
  const Solver solver(sys);

  // Transformed lengths of the two intervals: integrals of the equation
  // weights. Frozen reference values pin the quadrature itself.
  const auto q_t = [&e](double t) { return geometry::coefficient_q(e, t); };
  const auto p_s = [&e](double s) { return geometry::coefficient_p(e, s); };
  const double Q = numerics::integrate(q_t, 0.0, e.K());
  const double P = numerics::integrate(p_s, 0.0, e.K_prime());
  const double Q16 =
      numerics::integrate(q_t, 0.0, e.K(), 16, numerics::gauss_legendre(32));
  const double P16 = numerics::integrate(p_s, 0.0, e.K_prime(), 16,
                                         numerics::gauss_legendre(32));

  double worst_ratio = 0.0;
  const auto fold = [&worst_ratio](double dev, double tol) {
    worst_ratio = std::max(worst_ratio, dev / tol);
  };
  fold(std::abs(Q - Q16), 1e-12);
  fold(std::abs(P - P16), 1e-12);
  fold(std::abs(Q - 4.873171432199686), 1e-9);
  fold(std::abs(P - 2.7652162350121237), 1e-9);

  for (int side = 0; side < 2; ++side) {
    const double length = side == 0 ? Q : P;
    for (int left = 0; left <= 1; ++left) {
      for (int right = 0; right <= 1; ++right) {
        const geometry::Parity parity =
            side == 0 ? geometry::make_parity(left, right, 0)
                      : geometry::make_parity(0, right, left);
        const Family family = side == 0 ? Family::LowerH : Family::UpperH;
        const double sigma = 0.5 * (left + right);
        for (int index = 0; index <= 3; ++index) {
          const double base = (index + sigma) * kPi / length;
          // The t-side curve value is the eigenvalue itself; the s-side
          // curve is lambda minus it, so at lambda = 0 it is the negative.
          const double closed =
              side == 0 ? base * base : -(base * base);
          const EigencurveId id{family, index, parity};
          fold(std::abs(solver.value(id, 0.0, Backend::Galerkin) - closed),
               1e-8);
          fold(std::abs(solver.value(id, 0.0, Backend::Prufer) - closed),
               1e-8);
        }
      }
    }
  }

  result.measured = worst_ratio;
  result.pass = worst_ratio <= 1.0;
  result.detail = "Q=" + format_brief(Q) + " P=" + format_brief(P);
  return result;
}

// --- criterion 7: enumeration obeys the eigenvalue bounds -----------------

CheckResult check_enumeration_bounds(int threads) {
  CheckResult result{7, "enumerated spectrum obeys the two-sided bounds",
                     false, 0.0, 0.0, ""};
  const SeparatedSystem sys =
      SeparatedSystem::from_ellipsoid(standard_ellipsoid());
  const Solver solver(sys);
  const std::vector<spectrum::SpectrumEntry> entries =
      spectrum::enumerate_spectrum(solver, 60.0, Backend::Both, threads);

  double min_margin = std::numeric_limits<double>::infinity();
  bool all_ok = !entries.empty();
  for (const spectrum::SpectrumEntry& entry : entries) {
    for (const spectrum::BoundCheck& check :
         spectrum::validate_bounds(solver, entry)) {
      if (!check.satisfied) all_ok = false;
      if (std::isfinite(check.lower)) {
        min_margin = std::min(min_margin, check.value - check.lower);
      }
      if (std::isfinite(check.upper)) {
        min_margin = std::min(min_margin, check.upper - check.value);
      }
    }
  }

  result.measured = min_margin;
  result.pass = all_ok && min_margin > 0.0;
  result.detail = "entries=" + std::to_string(entries.size()) +
                  " min margin=" + format_brief(min_margin);
  return result;
}

// --- criterion 8: perturbation slopes by three routes ----------------------

CheckResult check_perturbation() {
  CheckResult result{8, "near-sphere slopes: quadrature and FD vs closed",
                     false, 0.0, 1e-4, ""};
  const double k = std::sqrt(0.625);
  const geometry::Parity parity = geometry::make_parity(0, 0, 0);

  double worst = 0.0;
  std::ostringstream detail;
  struct Mode {
    int m, n;
    double closed;
  };
  for (const Mode& mode : {Mode{0, 1, -1.5}, Mode{1, 0, 0.5}}) {
    const double closed_form =
        sphere_perturbation::closed_form_lambda_prime_l2(k, mode.m, mode.n);
    const double quadrature =
        sphere_perturbation::perturbation_derivative_quadrature(
            k, mode.m, mode.n, parity)
            .lambda_prime;
    const double finite_difference =
        sphere_perturbation::perturbation_derivative_fd(k, mode.m, mode.n,
                                                        parity, 1e-3);
    worst = std::max(worst, std::abs(closed_form - mode.closed));
    worst = std::max(worst, std::abs(quadrature - mode.closed));
    worst = std::max(worst, std::abs(finite_difference - mode.closed));
    detail << "(" << mode.m << "," << mode.n
           << ") quad dev=" << format_brief(std::abs(quadrature - mode.closed))
           << " fd dev="
           << format_brief(std::abs(finite_difference - mode.closed)) << " ";
  }

  result.measured = worst;
  result.pass = worst <= result.tolerance;
  result.detail = detail.str();
  return result;
}

// --- criterion 9: basis-size robustness ------------------------------------

CheckResult check_truncation() {
  CheckResult result{9, "cutoff robustness: N=32 vs 64 and the N=7 quartet",
                     false, 0.0, 1.0, ""};
  const geometry::Ellipsoid e = standard_ellipsoid();
  const SeparatedSystem sys = SeparatedSystem::from_ellipsoid(e);
  const galerkin::CoefficientSet coeffs =
      galerkin::t_equation_coefficients(e);

  double worst_ratio = 0.0;
  const auto fold = [&worst_ratio](double dev, double tol) {
    worst_ratio = std::max(worst_ratio, dev / tol);
  };

  for (int left = 0; left <= 1; ++left) {
    for (int right = 0; right <= 1; ++right) {
      const galerkin::BasisFamily family = galerkin::basis_for(left, right);
      const galerkin::GalerkinOperator op32 =
          galerkin::assemble(coeffs, family, 32);
      const galerkin::GalerkinOperator op64 =
          galerkin::assemble(coeffs, family, 64);
      for (const double lambda : {1.0, 5.0, 10.0}) {
        const std::vector<double> h32 =
            galerkin::eigenvalues_h(op32, lambda).values;
        const std::vector<double> h64 =
            galerkin::eigenvalues_h(op64, lambda).values;
        for (int n = 0; n <= 4; ++n) {
          fold(std::abs(h32[static_cast<size_t>(n)] -
                        h64[static_cast<size_t>(n)]),
               1e-9);
        }
      }
    }
  }

  // The same quartet survives a much smaller basis: N = 7 values stay
  // within display precision of their frozen references and within 1e-6 of
  // the N = 32 values.
  const Solver coarse(sys, 7);
  const Solver fine(sys);
  const geometry::Parity parity = geometry::make_parity(0, 0, 0);
  struct Mode {
    int m, n;
    double reference7;
  };
  for (const Mode& mode : {Mode{0, 1, 1.074471582}, Mode{1, 0, 2.134154016},
                           Mode{1, 1, 5.029767630}}) {
    const double lambda7 =
        spectrum::intersect(coarse, mode.m, mode.n, parity,
                            Backend::Galerkin)
            .lambda;
    const double lambda32 =
        spectrum::intersect(fine, mode.m, mode.n, parity, Backend::Galerkin)
            .lambda;
    fold(std::abs(lambda7 - mode.reference7), 1.5e-6);
    fold(std::abs(lambda7 - lambda32), 1e-6);
  }

  result.measured = worst_ratio;
  result.pass = worst_ratio <= 1.0;
  result.detail = "worst deviation at " + format_brief(worst_ratio) +
                  " of its sub-tolerance";
  return result;
}

// --- criterion 10: elliptic kernel identity sweep --------------------------

CheckResult check_elliptic_kernels() {
  CheckResult result{10, "elliptic kernel identities on random samples",
                     false, 0.0, 1e-12, ""};
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> t_dist(-10.0, 10.0);
  std::uniform_real_distribution<double> k2_dist(0.0, 0.96);

  double worst = 0.0;
  const auto fold = [&worst](double dev) { worst = std::max(worst, dev); };

  for (int i = 0; i < 10000; ++i) {
    const double t = t_dist(rng);
    const double k = std::sqrt(k2_dist(rng));
    const elliptic::EllipticModulus modulus(k);
    const elliptic::JacobiValues jv = modulus.jacobi(t);

    fold(std::abs(jv.sn * jv.sn + jv.cn * jv.cn - 1.0));
    fold(std::abs(jv.dn * jv.dn + k * k * jv.sn * jv.sn - 1.0));

    const elliptic::JacobiValues mirror = modulus.jacobi(-t);
    fold(std::abs(mirror.sn + jv.sn));
    fold(std::abs(mirror.cn - jv.cn));
    fold(std::abs(mirror.dn - jv.dn));

    const double K = modulus.K;
    const elliptic::JacobiValues full = modulus.jacobi(t + 4.0 * K);
    fold(std::abs(full.sn - jv.sn));
    fold(std::abs(full.cn - jv.cn));
    fold(std::abs(full.dn - jv.dn));

    const elliptic::JacobiValues half = modulus.jacobi(t + 2.0 * K);
    fold(std::abs(half.sn + jv.sn));
    fold(std::abs(half.cn + jv.cn));
    fold(std::abs(half.dn - jv.dn));

    const elliptic::JacobiValues quarter = modulus.jacobi(t + K);
    fold(std::abs(quarter.sn - jv.cn / jv.dn));
    fold(std::abs(quarter.cn + modulus.k_prime * jv.sn / jv.dn));
    fold(std::abs(quarter.dn - modulus.k_prime / jv.dn));
  }

  // Degenerate modulus: plain circular functions.
  const elliptic::EllipticModulus circular(0.0);
  for (int i = 0; i < 100; ++i) {
    const double t = t_dist(rng);
    const elliptic::JacobiValues jv = circular.jacobi(t);
    fold(std::abs(jv.sn - std::sin(t)));
    fold(std::abs(jv.cn - std::cos(t)));
    fold(std::abs(jv.dn - 1.0));
  }

  result.measured = worst;
  result.pass = worst <= result.tolerance;
  result.detail = "10000 samples, t in [-10,10], k^2 in [0,0.96]";
  return result;
}

}  // namespace

std::vector<CheckResult> run_acceptance(bool full, int threads) {
  std::vector<CheckResult> results;
  results.push_back(check_quartet());
  results.push_back(check_pinned_curve());
  if (full) results.push_back(check_sphere_limit(threads));
  if (full) results.push_back(check_backend_grid());
  if (full) results.push_back(check_slope_bands());
  results.push_back(check_lambda_zero());
  if (full) results.push_back(check_enumeration_bounds(threads));
  if (full) results.push_back(check_perturbation());
  if (full) results.push_back(check_truncation());
  results.push_back(check_elliptic_kernels());
  return results;
}

}  // namespace ellipsoid::verification
