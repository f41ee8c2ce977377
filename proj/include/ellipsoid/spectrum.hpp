#pragma once

#include <string>
#include <vector>

#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/geometry.hpp"

namespace ellipsoid::spectrum {

// One Laplace-Beltrami eigenvalue of the ellipsoid surface, located as the
// crossing of the upper curve H_m and the lower curve h_n of a parity class.
struct SpectrumEntry {
  int m = 0;
  int n = 0;
  geometry::Parity parity;
  int sphere_l = 0;      // 2m + 2n + |kappa|: degree of the sphere-limit mode
  double lambda = 0.0;   // surface eigenvalue
  double h = 0.0;        // separation constant at the crossing
  double residual_galerkin = 0.0;  // NaN when the backend was not run
  double residual_prufer = 0.0;    // NaN when the backend was not run
  int degeneracy = 1;    // size of the lambda-cluster this entry belongs to
};

// Degree and eigenvalue of the sphere-limit mode: l = 2m + 2n + |kappa|,
// lambda = l (l + 1).
int sphere_degree(int m, int n, const geometry::Parity& parity);
double sphere_limit_eigenvalue(int m, int n, const geometry::Parity& parity);

// Eigenvalue lambda with indices (m, n) and the given parity:
// root of H_m(lambda) - h_n(lambda) on [0, upper bound], found on the
// matrix-backend curves (Backend::Galerkin / Both) or entirely by shooting
// (Backend::Prufer). Backend::Both additionally recomputes both curves at
// the crossing with the shooting backend and throws NumericalError if the
// two routes disagree by more than 1e-6 * max(1, lambda) in lambda units.
SpectrumEntry intersect(const eigencurves::Solver& solver, int m, int n,
                        const geometry::Parity& parity,
                        eigencurves::Backend backend);

// All eigenvalues up to lambda_max across the eight parity classes,
// ascending, with cluster degeneracies assigned (lambdas closer than 1e-9
// are treated as one multiplet and ordered by parity weight, parity bits,
// m, n). threads <= 0 uses the OpenMP default.
std::vector<SpectrumEntry> enumerate_spectrum(const eigencurves::Solver& s,
                                              double lambda_max,
                                              eigencurves::Backend backend,
                                              int threads = 0);

// Reference implementation: same scan over parity classes, strictly
// sequential. Kept independent of the parallel driver so the two can be
// compared bit for bit.
std::vector<SpectrumEntry> enumerate_spectrum_serial(
    const eigencurves::Solver& s, double lambda_max,
    eigencurves::Backend backend);

// One two-sided or one-sided eigenvalue bound check.
struct BoundCheck {
  std::string name;
  double lower = 0.0;  // -infinity when one-sided
  double value = 0.0;
  double upper = 0.0;  // +infinity when one-sided
  bool satisfied = false;
};

// Inequality guards for an entry:
//   kappa2 = 1:             Lambda/a^2 < lambda < Lambda/c^2
//   kappa2 = 0:             lambda < Lambda_hat(m, n)/c^2
//   kappa2 = 0, m,n >= 1:   Lambda_hat(m-1, n-1)/a^2 < lambda
// with Lambda = sphere_limit_eigenvalue and hat marking the parity with its
// middle bit forced to 1. On the sphere the bounds collapse; there the
// check becomes |lambda - Lambda| <= 1e-8.
std::vector<BoundCheck> validate_bounds(const eigencurves::Solver& solver,
                                        const SpectrumEntry& entry);

}  // namespace ellipsoid::spectrum
