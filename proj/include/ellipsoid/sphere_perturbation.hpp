#pragma once

#include "ellipsoid/geometry.hpp"
#include "ellipsoid/system.hpp"

namespace ellipsoid::sphere_perturbation {

// Degree-2 polynomial modes sn^2 - theta at the sphere limit. For lambda = 6
// and all-even parity the separation constant is h = 2/theta with
//   theta_{+/-} = (1 + k^2 +/- sqrt(1 - k^2 k'^2)) / (3 k^2);
// the plus sign gives the nodeless ground mode (curve index n = 0), the
// minus sign the one-node mode (n = 1).
struct LameMode {
  double modulus = 0.0;
  bool plus_branch = true;
  double shift = 0.0;  // theta
  double h = 0.0;      // 2 / theta
};

LameMode lame_l2(double k, bool plus_branch);

// Largest pointwise residual of w = sn^2 - theta under
//   w'' + (h - 6 k^2 sn^2) w = 0
// over a dense grid on [0, K], normalized by max |w|. An algebraic identity
// check of the branch bookkeeping and the elliptic kernels (~1e-15).
double lame_l2_residual(double k, bool plus_branch);

// First-order response of one eigenvalue to the axis deformation
//   a = sqrt(1 + k^2 eps), b = 1, c = sqrt(1 - k'^2 eps)
// around the sphere (eps = 0), where both separation moduli stay frozen.
struct PerturbationDerivatives {
  double dh_dlambda = 0.0;  // lower-curve slope dh/dlambda at the crossing
  double dh_deps = 0.0;     // lower-curve response dh/deps
  double dH_dlambda = 0.0;  // upper-curve slope dH/dlambda
  double dH_deps = 0.0;     // upper-curve response dH/deps
  double lambda_prime = 0.0;  // d lambda / d eps at eps = 0
  double consistency = 0.0;   // |h_t + g_s - Lambda| of the sphere crossing
};

// Hellmann-Feynman route: the four partial derivatives from quadratures of
// the sphere eigenfunctions (both sides computed by the matrix backend at
// lambda = l(l+1)), combined into
//   lambda'(0) = -(dH/deps - dh/deps) / (dH/dlambda - dh/dlambda).
PerturbationDerivatives perturbation_derivative_quadrature(
    double k, int m, int n, const geometry::Parity& parity);

// lambda on the deformation family at finite eps (either sign). Negative
// eps is evaluated through the mirror family with the complementary modulus
// and the index/parity relabeling (m, n) -> (n, m), kappa -> reversed.
double lambda_epsilon(double k, double eps, int m, int n,
                      const geometry::Parity& parity);

// Central finite-difference derivative of lambda(eps) at eps = 0.
double perturbation_derivative_fd(double k, int m, int n,
                                  const geometry::Parity& parity,
                                  double step = 1e-3);

// Closed forms for the two degree-2 all-even modes:
//   (m, n) = (0, 1): lambda'(0) = 2 - 4 k^2 - (8/7) sqrt(1 - k^2 k'^2)
//   (m, n) = (1, 0): lambda'(0) = 2 - 4 k^2 + (8/7) sqrt(1 - k^2 k'^2)
double closed_form_lambda_prime_l2(double k, int m, int n);

}  // namespace ellipsoid::sphere_perturbation
