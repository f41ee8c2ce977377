#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ellipsoid/errors.hpp"

namespace ellipsoid::numerics {

// ---- root finding --------------------------------------------------------

struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

// Builds a bracket, evaluating f at both ends; throws InvalidArgument unless
// lo < hi and f(lo), f(hi) have opposite (or zero) signs.
RootBracket make_bracket(const std::function<double(double)>& f, double lo,
                         double hi);

// Safeguarded secant/bisection hybrid. Returns a point x inside the bracket
// with |f(x)| no larger than at either endpoint; the bracket width at exit is
// at most rtol * max(1, |x|).
double find_root(const std::function<double(double)>& f, RootBracket bracket,
                 double rtol);

// ---- quadrature ----------------------------------------------------------

struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;  // positive, summing to 2
};

// Gauss-Legendre nodes/weights (order 1..64), via Newton on P_n.
QuadratureRule gauss_legendre(int order);

// Composite Gauss-Legendre integration of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, const QuadratureRule& rule);
// Default: 8 panels of the order-32 rule.
double integrate(const std::function<double(double)>& f, double a, double b);

// ---- ODE integration -----------------------------------------------------

// Scalar adaptive embedded Runge-Kutta pair (Dormand-Prince 5(4)), forward
// integration from t0 to t1 >= t0, local error controlled at tol. Fully
// deterministic. Throws NumericalError on step underflow.
double integrate_ode(const std::function<double(double, double)>& rhs,
                     double t0, double t1, double y0, double tol);

// Same integrator, invoking observe(t, y) at t0 and after every accepted
// step. Used by diagnostics that must see the accepted grid.
double integrate_ode_observed(
    const std::function<double(double, double)>& rhs, double t0, double t1,
    double y0, double tol,
    const std::function<void(double, double)>& observe);

// ---- dense linear algebra ------------------------------------------------

struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c)
      : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), 0.0) {}

  double& operator()(int i, int j) {
    return data[static_cast<size_t>(i) * static_cast<size_t>(cols) +
                static_cast<size_t>(j)];
  }
  double operator()(int i, int j) const {
    return data[static_cast<size_t>(i) * static_cast<size_t>(cols) +
                static_cast<size_t>(j)];
  }
};

// Real eigenvalues of the generalized problem A u = h B u, ascending by real
// part. B is reduced by LU factorization (throws NumericalError when a pivot
// falls below 1e-13 * ||B||); eigenvalues with |Im| > 1e-8 * max(1, |Re|)
// are discarded as complex artifacts.
std::vector<double> real_generalized_eigenvalues(const DenseMatrix& A,
                                                 const DenseMatrix& B);

// Eigenvector of A u = h B u for a known eigenvalue h, by shifted inverse
// iteration; normalized to unit Euclidean norm with its largest-magnitude
// component positive. Throws NumericalError if the residual
// ||(A - h B) u|| <= 1e-8 * (||A|| + |h| ||B||) is not reached in 10 sweeps.
std::vector<double> inverse_iteration_eigenvector(const DenseMatrix& A,
                                                  const DenseMatrix& B,
                                                  double h);

}  // namespace ellipsoid::numerics
