#include "ellipsoid/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>
#include <utility>

namespace ellipsoid::galerkin {

CoefficientSet t_equation_coefficients(const geometry::Ellipsoid& e) {
  return {e.a, e.b, e.c, e.k()};
}

CoefficientSet swap_for_s_equation(const geometry::Ellipsoid& e) {
  return {e.c, e.b, e.a, e.k_prime()};
}

BasisFamily basis_for(int kappa_left, int kappa_right) {
  if ((kappa_left != 0 && kappa_left != 1) ||
      (kappa_right != 0 && kappa_right != 1)) {
    throw InvalidArgument("boundary condition bits must be 0 or 1");
  }
  // tau = pi/2 - am(t) reverses the interval ends, so the left (t = 0,
  // tau = pi/2) condition is read off at odd harmonics' zero/extremum at
  // pi/2 and the right (t = K, tau = 0) condition at tau = 0:
  //   cos(2n tau):    even at both ends            -> (0, 0)
  //   sin(2n tau):    vanishes at both ends        -> (1, 1)
  //   cos((2n+1)tau): zero at tau = pi/2, even at tau = 0 -> (1, 0)
  //   sin((2n+1)tau): extremum at tau = pi/2, zero at tau = 0 -> (0, 1)
  if (kappa_left == 0 && kappa_right == 0) return BasisFamily::CosEven;
  if (kappa_left == 1 && kappa_right == 1) return BasisFamily::SinEven;
  if (kappa_left == 1 && kappa_right == 0) return BasisFamily::CosOdd;
  return BasisFamily::SinOdd;
}

int family_dimension(BasisFamily family, int N) {
  if (N < 1) throw InvalidArgument("basis cutoff N must be at least 1");
  return family == BasisFamily::SinEven ? N : N + 1;
}

int family_harmonic(BasisFamily family, int index) {
  switch (family) {
    case BasisFamily::CosEven:
      return 2 * index;
    case BasisFamily::SinEven:
      return 2 * (index + 1);
    case BasisFamily::CosOdd:
    case BasisFamily::SinOdd:
      return 2 * index + 1;
  }
  throw InvalidArgument("unknown basis family");
}

bool family_is_sine(BasisFamily family) {
  return family == BasisFamily::SinEven || family == BasisFamily::SinOdd;
}

double basis_value(BasisFamily family, int index, double tau) {
  const double w = family_harmonic(family, index);
  return family_is_sine(family) ? std::sin(w * tau) : std::cos(w * tau);
}

double basis_derivative(BasisFamily family, int index, double tau) {
  const double w = family_harmonic(family, index);
  return family_is_sine(family) ? w * std::cos(w * tau)
                                : -w * std::sin(w * tau);
}

double basis_second_derivative(BasisFamily family, int index, double tau) {
  const double w = family_harmonic(family, index);
  return family_is_sine(family) ? -w * w * std::sin(w * tau)
                                : -w * w * std::cos(w * tau);
}

namespace {

// One product-to-sum contribution: coefficient `coeff` landing on the signed
// harmonic `target`. Negative targets fold back through cos(-m) = cos(m) or
// sin(-m) = -sin(m).
struct Contribution {
  int target;
  double coeff;
};

void fold_column(numerics::DenseMatrix& M, BasisFamily family, int dim,
                 int column, const std::vector<Contribution>& contributions) {
  const bool sine = family_is_sine(family);
  for (const Contribution& c : contributions) {
    int m = c.target;
    double value = c.coeff;
    if (m < 0) {
      if (sine) value = -value;
      m = -m;
    }
    if (sine && m == 0) continue;  // sin(0 tau) vanishes identically
    // Map the harmonic back to a row index of this family, if it has one.
    int row = -1;
    switch (family) {
      case BasisFamily::CosEven:
        if (m % 2 == 0) row = m / 2;
        break;
      case BasisFamily::SinEven:
        if (m % 2 == 0 && m >= 2) row = m / 2 - 1;
        break;
      case BasisFamily::CosOdd:
      case BasisFamily::SinOdd:
        if (m % 2 == 1) row = (m - 1) / 2;
        break;
    }
    if (row < 0 || row >= dim) continue;  // truncated by the cutoff
    M(row, column) += value;
  }
}

}  // namespace

GalerkinOperator assemble(const CoefficientSet& coeffs, BasisFamily family,
                          int N) {
  if (!(coeffs.axis_major > 0.0) || !(coeffs.axis_mid > 0.0) ||
      !(coeffs.axis_minor > 0.0)) {
    throw InvalidArgument("coefficient axes must be positive");
  }
  if (!(coeffs.modulus >= 0.0) || !(coeffs.modulus < 1.0)) {
    throw InvalidArgument("modulus must lie in [0, 1)");
  }
  const int dim = family_dimension(family, N);

  const double A = coeffs.axis_major;
  const double B = coeffs.axis_mid;
  const double C = coeffs.axis_minor;
  const double k2 = coeffs.modulus * coeffs.modulus;
  const double A2 = A * A, B2 = B * B, C2 = C * C;
  const double A4 = A2 * A2, B4 = B2 * B2;

  // Fourier coefficients of the operator weights on [0, pi/2]:
  //   (A^2 sin^2 + B^2 cos^2)(1 - k^2 cos^2) = a0 + a1 cos2 + a2 cos4
  //   (A^2 sin^2 + B^2 cos^2)^2              = b0 + b1 cos2 + b2 cos4
  //   cos^2 (A^2 sin^2 + B^2 cos^2)^2        = c0 + c1 cos2 + ... + c3 cos6
  const double a0 = 0.5 * (A2 + B2) - 0.125 * k2 * (A2 + 3.0 * B2);
  const double a1 = 0.5 * (B2 - A2 - B2 * k2);
  const double a2 = 0.125 * k2 * (A2 - B2);

  const double c0 = (A4 + 2.0 * A2 * B2 + 5.0 * B4) / 16.0;
  const double c1 = (15.0 * B4 + 2.0 * A2 * B2 - A4) / 32.0;
  const double c2 = (B2 - A2) * (A2 + 3.0 * B2) / 16.0;
  const double c3 = (A2 - B2) * (A2 - B2) / 32.0;

  const double b0 = (3.0 * A4 + 2.0 * A2 * B2 + 3.0 * B4) / 8.0;
  const double b1 = (B4 - A4) / 2.0;
  const double b2 = (A2 - B2) * (A2 - B2) / 8.0;

  GalerkinOperator op;
  op.coeffs = coeffs;
  op.basis = family;
  op.N = N;
  op.D = numerics::DenseMatrix(dim, dim);
  op.C = numerics::DenseMatrix(dim, dim);
  op.B = numerics::DenseMatrix(dim, dim);

  for (int j = 0; j < dim; ++j) {
    const int w = family_harmonic(family, j);
    const double w2 = static_cast<double>(w) * static_cast<double>(w);
    const double drv = C2 * k2 * static_cast<double>(w) / 4.0;

    // -(weight) phi'' contributes +w^2 (weight) phi; the first-derivative
    // term -C^2 k^2 cos sin phi' splits antisymmetrically across w -/+ 2.
    const std::vector<Contribution> d_contrib = {
        {w, w2 * a0},
        {w - 2, w2 * a1 / 2.0 + drv},
        {w + 2, w2 * a1 / 2.0 - drv},
        {w - 4, w2 * a2 / 2.0},
        {w + 4, w2 * a2 / 2.0},
    };
    const std::vector<Contribution> c_contrib = {
        {w, k2 * c0},         {w - 2, k2 * c1 / 2.0}, {w + 2, k2 * c1 / 2.0},
        {w - 4, k2 * c2 / 2.0}, {w + 4, k2 * c2 / 2.0}, {w - 6, k2 * c3 / 2.0},
        {w + 6, k2 * c3 / 2.0},
    };
    const std::vector<Contribution> b_contrib = {
        {w, b0},           {w - 2, b1 / 2.0}, {w + 2, b1 / 2.0},
        {w - 4, b2 / 2.0}, {w + 4, b2 / 2.0},
    };

    fold_column(op.D, family, dim, j, d_contrib);
    fold_column(op.C, family, dim, j, c_contrib);
    fold_column(op.B, family, dim, j, b_contrib);
  }
  return op;
}

namespace {

numerics::DenseMatrix pencil_matrix(const GalerkinOperator& op,
                                    double lambda) {
  const int dim = op.D.rows;
  numerics::DenseMatrix A(dim, dim);
  for (size_t i = 0; i < A.data.size(); ++i) {
    A.data[i] = op.D.data[i] + lambda * op.C.data[i];
  }
  return A;
}

double matrix_inf_norm(const numerics::DenseMatrix& M) {
  double worst = 0.0;
  for (int i = 0; i < M.rows; ++i) {
    double row = 0.0;
    for (int j = 0; j < M.cols; ++j) row += std::abs(M(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

}  // namespace

HSpectrum eigenvalues_h(const GalerkinOperator& op, double lambda) {
  HSpectrum spectrum;
  spectrum.values =
      numerics::real_generalized_eigenvalues(pencil_matrix(op, lambda), op.B);
  spectrum.trusted =
      std::max(1, static_cast<int>(spectrum.values.size()) / 2);
  return spectrum;
}

Eigenpair eigenfunction(const GalerkinOperator& op, double lambda,
                        int index) {
  const HSpectrum spectrum = eigenvalues_h(op, lambda);
  if (index < 0 || index >= static_cast<int>(spectrum.values.size())) {
    throw InvalidArgument("eigenvalue index " + std::to_string(index) +
                          " outside the computed spectrum");
  }
  const double h = spectrum.values[static_cast<size_t>(index)];
  const numerics::DenseMatrix A = pencil_matrix(op, lambda);

  Eigenpair pair;
  pair.h = h;
  pair.coefficients = numerics::inverse_iteration_eigenvector(A, op.B, h);

  const int dim = A.rows;
  double residual_sq = 0.0;
  for (int i = 0; i < dim; ++i) {
    double r = 0.0;
    for (int j = 0; j < dim; ++j) {
      r += (A(i, j) - h * op.B(i, j)) * pair.coefficients[static_cast<size_t>(j)];
    }
    residual_sq += r * r;
  }
  const double scale = matrix_inf_norm(A) + std::abs(h) * matrix_inf_norm(op.B);
  pair.residual = std::sqrt(residual_sq) / std::max(scale, 1e-300);
  return pair;
}

FunctionValues evaluate_in_t(BasisFamily family,
                             const std::vector<double>& coefficients,
                             const elliptic::EllipticModulus& modulus,
                             double t) {
  const double tau = std::numbers::pi_v<double> / 2.0 - modulus.amplitude(t);
  const elliptic::JacobiValues jv = modulus.jacobi(t);

  double phi = 0.0, dphi = 0.0, ddphi = 0.0;
  for (size_t j = 0; j < coefficients.size(); ++j) {
    const int idx = static_cast<int>(j);
    phi += coefficients[j] * basis_value(family, idx, tau);
    dphi += coefficients[j] * basis_derivative(family, idx, tau);
    ddphi += coefficients[j] * basis_second_derivative(family, idx, tau);
  }

  // tau(t) has d(tau)/dt = -dn(t) and d(dn)/dt = -k^2 sn cn, hence
  //   w'  = -dn Phi'
  //   w'' = dn^2 Phi'' + k^2 sn cn Phi'.
  const double k2 = modulus.k * modulus.k;
  FunctionValues out;
  out.w = phi;
  out.wp = -jv.dn * dphi;
  out.wpp = jv.dn * jv.dn * ddphi + k2 * jv.sn * jv.cn * dphi;
  return out;
}

}  // namespace ellipsoid::galerkin
