#pragma once

#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/galerkin.hpp"
#include "ellipsoid/geometry.hpp"

namespace ellipsoid {

// One side of the separated eigenvalue problem: the coefficient set of the
// equation in its own variable on [0, endpoint], with the exact elliptic
// modulus ladder for that variable.
struct EquationSide {
  galerkin::CoefficientSet coeffs;
  elliptic::EllipticModulus modulus;
  double endpoint;
};

// The coupled pair of one-dimensional problems produced by separating the
// surface Laplacian. The t-side lives on [0, K(k)] with coefficients
// (a, b, c, k); the s-side is the same equation type after the swap
// (c, b, a, k') and eigenvalue reflection h -> lambda - h, on [0, K(k')].
struct SeparatedSystem {
  double axis_a, axis_b, axis_c;
  bool sphere_mode = false;  // axes equal; moduli chosen directly
  EquationSide t_side;
  EquationSide s_side;

  double modulus_k() const { return t_side.coeffs.modulus; }
  double modulus_k_prime() const { return s_side.coeffs.modulus; }

  static SeparatedSystem from_ellipsoid(const geometry::Ellipsoid& e);

  // Unit sphere with the separation modulus k in (0, 1) chosen freely (the
  // sphere limit leaves it arbitrary); eigenvalues must not depend on it.
  static SeparatedSystem from_sphere_modulus(double k);

  // One-parameter family through the unit sphere with frozen moduli:
  //   a = sqrt(1 + k^2 eps), b = 1, c = sqrt(1 - k'^2 eps), eps in
  //   [0, 1/k'^2). The derived moduli equal (k, k') exactly for every eps,
  // which keeps the basis and quadrature geometry fixed while the axes
  // deform; eps = 0 reduces to the sphere.
  static SeparatedSystem from_epsilon_family(double k, double eps);
};

}  // namespace ellipsoid
