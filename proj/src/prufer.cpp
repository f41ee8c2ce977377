#include "ellipsoid/prufer.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "ellipsoid/numerics.hpp"

namespace ellipsoid::prufer {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

std::function<double(double, double)> phase_rhs(const PruferProblem& problem,
                                                double h, double lambda) {
  const double major2 = problem.coeffs.axis_major * problem.coeffs.axis_major;
  const double mid2 = problem.coeffs.axis_mid * problem.coeffs.axis_mid;
  const double mod2 = problem.modulus.k * problem.modulus.k;
  const elliptic::EllipticModulus& modulus = problem.modulus;
  return [major2, mid2, mod2, h, lambda, &modulus](double t, double theta) {
    const elliptic::JacobiValues jv = modulus.jacobi(t);
    const double q = std::sqrt(major2 * jv.cn * jv.cn + mid2 * jv.sn * jv.sn);
    const double v = h - lambda * mod2 * jv.sn * jv.sn;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return q * (c * c + v * s * s);
  };
}

}  // namespace

PruferProblem make_problem(const galerkin::CoefficientSet& coeffs,
                           int kappa_left, int kappa_right) {
  if ((kappa_left != 0 && kappa_left != 1) ||
      (kappa_right != 0 && kappa_right != 1)) {
    throw InvalidArgument("boundary condition bits must be 0 or 1");
  }
  elliptic::EllipticModulus modulus(coeffs.modulus);
  const double endpoint = modulus.K;
  return PruferProblem{coeffs, std::move(modulus), endpoint, kappa_left,
                       kappa_right};
}

double initial_theta(int kappa_left) {
  return 0.5 * (1.0 - static_cast<double>(kappa_left)) * kPi;
}

double target_theta(int kappa_right, int n) {
  if (n < 0) throw InvalidArgument("zero count n must be non-negative");
  return 0.5 * (1.0 + static_cast<double>(kappa_right)) * kPi +
         static_cast<double>(n) * kPi;
}

double theta_at_end(const PruferProblem& problem, double h, double lambda,
                    double tol) {
  return numerics::integrate_ode(phase_rhs(problem, h, lambda), 0.0,
                                 problem.endpoint,
                                 initial_theta(problem.kappa_left), tol);
}

std::vector<std::pair<double, double>> theta_trajectory(
    const PruferProblem& problem, double h, double lambda, double tol) {
  std::vector<std::pair<double, double>> samples;
  numerics::integrate_ode_observed(
      phase_rhs(problem, h, lambda), 0.0, problem.endpoint,
      initial_theta(problem.kappa_left), tol,
      [&samples](double t, double theta) { samples.emplace_back(t, theta); });
  return samples;
}

int count_interior_zeros(double theta_end) {
  int count = 0;
  for (int l = 1; static_cast<double>(l) * kPi < theta_end - 1e-6; ++l) {
    ++count;
  }
  return count;
}

namespace {

double shoot_on_bracket(const PruferProblem& problem, int n, double lambda,
                        double lo, double hi) {
  const double target = target_theta(problem.kappa_right, n);
  const auto g = [&problem, lambda, target](double h) {
    return theta_at_end(problem, h, lambda) - target;
  };

  // theta_at_end is strictly increasing in h, so expand whichever side has
  // the wrong sign until the root is enclosed.
  double g_lo = g(lo);
  double g_hi = g(hi);
  double span = hi - lo;
  while (g_lo > 0.0) {
    hi = lo;
    g_hi = g_lo;
    lo -= span;
    span *= 2.0;
    if (lo < -1e6) {
      throw NumericalError("no eigenvalue bracket found below h = -1e6");
    }
    g_lo = g(lo);
  }
  while (g_hi < 0.0) {
    lo = hi;
    g_lo = g_hi;
    hi += span;
    span *= 2.0;
    if (hi > 1e6) {
      throw NumericalError("no eigenvalue bracket found above h = 1e6");
    }
    g_hi = g(hi);
  }
  return numerics::find_root(g, {lo, hi, g_lo, g_hi}, 1e-12);
}

}  // namespace

double shoot_h(const PruferProblem& problem, int n, double lambda) {
  return shoot_on_bracket(problem, n, lambda, -1.0, 1.0);
}

double shoot_h(const PruferProblem& problem, int n, double lambda,
               double hint_lo, double hint_hi) {
  if (!(hint_lo < hint_hi)) {
    throw InvalidArgument("bracket hint must satisfy lo < hi");
  }
  return shoot_on_bracket(problem, n, lambda, hint_lo, hint_hi);
}

}  // namespace ellipsoid::prufer
