#include "ellipsoid/sphere_perturbation.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/galerkin.hpp"
#include "ellipsoid/numerics.hpp"
#include "ellipsoid/spectrum.hpp"

namespace ellipsoid::sphere_perturbation {

LameMode lame_l2(double k, bool plus_branch) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw InvalidArgument("modulus must lie in (0, 1)");
  }
  const double k2 = k * k;
  const double kp2 = 1.0 - k2;
  const double root = std::sqrt(1.0 - k2 * kp2);
  const double theta =
      (1.0 + k2 + (plus_branch ? root : -root)) / (3.0 * k2);
  return LameMode{k, plus_branch, theta, 2.0 / theta};
}

double lame_l2_residual(double k, bool plus_branch) {
  const LameMode mode = lame_l2(k, plus_branch);
  const elliptic::EllipticModulus modulus(k);
  const double k2 = k * k;

  double worst = 0.0;
  double scale = 0.0;
  const int samples = 2000;
  for (int i = 0; i <= samples; ++i) {
    const double t = modulus.K * static_cast<double>(i) / samples;
    const elliptic::JacobiValues jv = modulus.jacobi(t);
    const double sn2 = jv.sn * jv.sn;
    const double cn2 = jv.cn * jv.cn;
    const double dn2 = jv.dn * jv.dn;
    const double w = sn2 - mode.shift;
    const double wpp =
        2.0 * (cn2 * dn2 - sn2 * dn2 - k2 * sn2 * cn2);
    const double residual = wpp + (mode.h - 6.0 * k2 * sn2) * w;
    worst = std::max(worst, std::abs(residual));
    scale = std::max(scale, std::abs(w));
  }
  return worst / scale;
}

namespace {

struct SideQuadrature {
  double h = 0.0;          // matrix eigenvalue of this side at lambda
  double d_lambda = 0.0;   // mod^2 int sn^2 f^2 / int f^2
  double d_eps = 0.0;      // mod^2 int cn f (cn f'' - sn dn f') / int f^2
};

// Eigenfunction quadratures of one equation side at the sphere, where the
// coefficient weight is identically 1 and the equation is
//   f'' + (h - lambda mod^2 sn^2) f = 0 on [0, K(mod)].
SideQuadrature side_quadrature(const galerkin::CoefficientSet& coeffs,
                               const elliptic::EllipticModulus& modulus,
                               int kappa_left, int kappa_right, int index,
                               double lambda) {
  const galerkin::BasisFamily family =
      galerkin::basis_for(kappa_left, kappa_right);
  const int N = std::max(32, 4 * index + 16);
  const galerkin::GalerkinOperator op =
      galerkin::assemble(coeffs, family, N);
  const galerkin::Eigenpair pair =
      galerkin::eigenfunction(op, lambda, index);

  const double mod2 = modulus.k * modulus.k;
  const auto norm_term = [&](double t) {
    const galerkin::FunctionValues fv =
        galerkin::evaluate_in_t(family, pair.coefficients, modulus, t);
    return fv.w * fv.w;
  };
  const auto sn2_term = [&](double t) {
    const elliptic::JacobiValues jv = modulus.jacobi(t);
    const galerkin::FunctionValues fv =
        galerkin::evaluate_in_t(family, pair.coefficients, modulus, t);
    return jv.sn * jv.sn * fv.w * fv.w;
  };
  const auto eps_term = [&](double t) {
    const elliptic::JacobiValues jv = modulus.jacobi(t);
    const galerkin::FunctionValues fv =
        galerkin::evaluate_in_t(family, pair.coefficients, modulus, t);
    return jv.cn * fv.w *
           (jv.cn * fv.wpp - jv.sn * jv.dn * fv.wp);
  };

  const double norm = numerics::integrate(norm_term, 0.0, modulus.K);
  SideQuadrature out;
  out.h = pair.h;
  out.d_lambda = mod2 * numerics::integrate(sn2_term, 0.0, modulus.K) / norm;
  out.d_eps = mod2 * numerics::integrate(eps_term, 0.0, modulus.K) / norm;
  return out;
}

}  // namespace

PerturbationDerivatives perturbation_derivative_quadrature(
    double k, int m, int n, const geometry::Parity& parity) {
  if (m < 0 || n < 0) throw InvalidArgument("indices must be non-negative");
  const SeparatedSystem sys = SeparatedSystem::from_sphere_modulus(k);
  const double big_lambda =
      spectrum::sphere_limit_eigenvalue(m, n, parity);

  const SideQuadrature t_side =
      side_quadrature(sys.t_side.coeffs, sys.t_side.modulus, parity.kappa1,
                      parity.kappa2, n, big_lambda);
  const SideQuadrature s_side =
      side_quadrature(sys.s_side.coeffs, sys.s_side.modulus, parity.kappa3,
                      parity.kappa2, m, big_lambda);

  PerturbationDerivatives out;
  out.dh_dlambda = t_side.d_lambda;
  out.dh_deps = t_side.d_eps;
  // The upper curve is H = lambda - g(lambda, eps) with g the swapped-side
  // eigenvalue. dH/dlambda = 1 - dg/dlambda; for the eps response, the swap
  // reverses the sign with which the deformation enters the s-equation, so
  // -dg/deps equals the same quadrature form evaluated on the s-side.
  out.dH_dlambda = 1.0 - s_side.d_lambda;
  out.dH_deps = s_side.d_eps;
  out.consistency = std::abs(t_side.h + s_side.h - big_lambda);
  if (out.consistency > 1e-6 * std::max(1.0, big_lambda)) {
    throw NumericalError(
        "sphere crossing inconsistent: the two separation constants do not "
        "sum to l(l+1)");
  }
  out.lambda_prime = -(out.dH_deps - out.dh_deps) /
                     (out.dH_dlambda - out.dh_dlambda);
  return out;
}

double lambda_epsilon(double k, double eps, int m, int n,
                      const geometry::Parity& parity) {
  if (eps < 0.0) {
    // Mirror family: swapping the roles of the two angular variables turns
    // eps < 0 at modulus k into eps > 0 at the complementary modulus, with
    // the curve indices and outer parity bits exchanged.
    const double k_prime = elliptic::EllipticModulus(k).k_prime;
    const geometry::Parity mirrored =
        geometry::make_parity(parity.kappa3, parity.kappa2, parity.kappa1);
    return lambda_epsilon(k_prime, -eps, n, m, mirrored);
  }
  const SeparatedSystem sys = SeparatedSystem::from_epsilon_family(k, eps);
  const eigencurves::Solver solver(sys);
  return spectrum::intersect(solver, m, n, parity,
                             eigencurves::Backend::Galerkin)
      .lambda;
}

double perturbation_derivative_fd(double k, int m, int n,
                                  const geometry::Parity& parity,
                                  double step) {
  if (!(step > 0.0)) throw InvalidArgument("step must be positive");
  const double above = lambda_epsilon(k, step, m, n, parity);
  const double below = lambda_epsilon(k, -step, m, n, parity);
  return (above - below) / (2.0 * step);
}

double closed_form_lambda_prime_l2(double k, int m, int n) {
  if (!((m == 0 && n == 1) || (m == 1 && n == 0))) {
    throw InvalidArgument(
        "closed form available for the degree-2 modes (0,1) and (1,0) only");
  }
  const double k2 = k * k;
  const double kp2 = 1.0 - k2;
  const double root = std::sqrt(1.0 - k2 * kp2);
  const double sign = (m == 0) ? -1.0 : 1.0;
  return 2.0 - 4.0 * k2 + sign * (8.0 / 7.0) * root;
}

}  // namespace ellipsoid::sphere_perturbation
