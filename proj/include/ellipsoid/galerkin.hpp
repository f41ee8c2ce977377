#pragma once

#include <vector>

#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/geometry.hpp"
#include "ellipsoid/numerics.hpp"

namespace ellipsoid::galerkin {

// The t-equation
//   (w'/q)' + q (h - lambda k^2 sn^2(t,k)) w = 0 on [0, K]
// is transformed with tau = pi/2 - am(t, k), which maps t = 0 to tau = pi/2
// and t = K to tau = 0, and gives cn(t,k) = sin(tau), sn(t,k) = cos(tau).
// In tau it reads (D + lambda C) w = h B w with
//   D w = -(A^2 sin^2 + B^2 cos^2)(1 - k^2 cos^2) w'' - C^2 k^2 cos sin w'
//   C w = k^2 cos^2 (A^2 sin^2 + B^2 cos^2)^2 w
//   B w = (A^2 sin^2 + B^2 cos^2)^2 w
// where (A, B, C) are (axis_major, axis_mid, axis_minor).

// Trigonometric basis families on tau in [0, pi/2]:
//   CosEven: cos(2n tau), n >= 0      SinEven: sin(2n tau), n >= 1
//   CosOdd:  cos((2n+1) tau), n >= 0  SinOdd:  sin((2n+1) tau), n >= 0
enum class BasisFamily { CosEven, SinEven, CosOdd, SinOdd };

// Coefficient data of one equation in trigonometric form. For the t-equation
// of an ellipsoid this is (a, b, c, k); the s-equation in the same form uses
// the swapped set (c, b, a, k'). Swapped sets legitimately have
// axis_major < axis_mid; only positivity is required.
struct CoefficientSet {
  double axis_major = 1.0;
  double axis_mid = 1.0;
  double axis_minor = 1.0;
  double modulus = 0.0;
};

CoefficientSet t_equation_coefficients(const geometry::Ellipsoid& e);
CoefficientSet swap_for_s_equation(const geometry::Ellipsoid& e);

// Basis family realizing the boundary conditions (kappa_left at t = 0,
// kappa_right at t = K): 0 = Neumann, 1 = Dirichlet. Because tau reverses
// the endpoints, the odd families pair as (1,0) -> CosOdd, (0,1) -> SinOdd.
BasisFamily basis_for(int kappa_left, int kappa_right);

int family_dimension(BasisFamily family, int N);
// Harmonic number of basis element `index` (2n, or 2n+1 for odd families).
int family_harmonic(BasisFamily family, int index);
bool family_is_sine(BasisFamily family);

// Basis element values on the tau interval.
double basis_value(BasisFamily family, int index, double tau);
double basis_derivative(BasisFamily family, int index, double tau);
double basis_second_derivative(BasisFamily family, int index, double tau);

struct GalerkinOperator {
  CoefficientSet coeffs;
  BasisFamily basis = BasisFamily::CosEven;
  int N = 0;
  numerics::DenseMatrix D, C, B;
};

// Assembles the exact (product-to-sum) matrix representation; every entry is
// a closed-form polynomial in the axes and k^2, no quadrature involved.
GalerkinOperator assemble(const CoefficientSet& coeffs, BasisFamily family,
                          int N);

struct HSpectrum {
  std::vector<double> values;  // ascending real eigenvalues of (D + lambda C, B)
  int trusted;                 // leading count converged in N (about dim/2)
};

HSpectrum eigenvalues_h(const GalerkinOperator& op, double lambda);

struct Eigenpair {
  double h = 0.0;
  std::vector<double> coefficients;  // unit norm, largest component positive
  double residual = 0.0;             // ||(D + lambda C - h B) u|| / scale
};

Eigenpair eigenfunction(const GalerkinOperator& op, double lambda, int index);

// Eigenfunction evaluated back in the t variable through tau = pi/2 - am(t,k):
//   w(t), w'(t) = -dn(t,k) W'(tau), w''(t) = dn^2 W'' + k^2 sn cn W'.
struct FunctionValues {
  double w, wp, wpp;
};

FunctionValues evaluate_in_t(BasisFamily family,
                             const std::vector<double>& coefficients,
                             const elliptic::EllipticModulus& modulus,
                             double t);

}  // namespace ellipsoid::galerkin
