#pragma once

#include <utility>
#include <vector>

#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/galerkin.hpp"
#include "ellipsoid/geometry.hpp"

namespace ellipsoid::prufer {

// Phase-angle shooting for the boundary value problem
//   (w'/q)' + q (h - lambda mod^2 sn^2(t, mod)) w = 0 on [0, endpoint],
// with q(t) = sqrt(axis_major^2 cn^2 + axis_mid^2 sn^2). The substitution
// w = r sin(theta), w'/q = r cos(theta) turns it into the scalar ODE
//   theta' = q(t) (cos^2 theta + (h - lambda mod^2 sn^2) sin^2 theta),
// whose right side equals q(t) > 0 whenever theta is a multiple of pi, so
// the phase can only cross zero levels of w upward. Eigenvalues are found
// by shooting on the terminal phase.
struct PruferProblem {
  galerkin::CoefficientSet coeffs;
  elliptic::EllipticModulus modulus;
  double endpoint;
  int kappa_left = 0;   // 0 = Neumann-type (w' = 0), 1 = Dirichlet (w = 0)
  int kappa_right = 0;
};

// Builds the problem on [0, K(mod)] from a coefficient set; the modulus
// ladder is derived from coeffs.modulus alone.
PruferProblem make_problem(const galerkin::CoefficientSet& coeffs,
                           int kappa_left, int kappa_right);

// Initial phase: pi/2 for a Neumann-type left end, 0 for Dirichlet.
double initial_theta(int kappa_left);
// Terminal phase of the eigenfunction with n interior zeros:
//   (1 + kappa_right) pi / 2 + n pi.
double target_theta(int kappa_right, int n);

// Terminal phase theta(endpoint) for given (h, lambda).
double theta_at_end(const PruferProblem& problem, double h, double lambda,
                    double tol = 1e-11);

// Accepted integration samples (t, theta), for trajectory diagnostics.
std::vector<std::pair<double, double>> theta_trajectory(
    const PruferProblem& problem, double h, double lambda,
    double tol = 1e-11);

// Number of interior zeros of w implied by a terminal phase (levels l pi,
// l >= 1, strictly below theta_end up to a 1e-6 phase margin).
int count_interior_zeros(double theta_end);

// Eigenvalue h with exactly n interior zeros, by bracketed root finding on
// theta_at_end - target. Starts from [-1, 1] and doubles outward; throws
// NumericalError if no bracket is found within |h| <= 1e6.
double shoot_h(const PruferProblem& problem, int n, double lambda);
// Same, but tries the caller's bracket first (expanding it if needed).
double shoot_h(const PruferProblem& problem, int n, double lambda,
               double hint_lo, double hint_hi);

}  // namespace ellipsoid::prufer
