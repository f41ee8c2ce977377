#include "ellipsoid/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ellipsoid::numerics {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

// ---- root finding --------------------------------------------------------

RootBracket make_bracket(const std::function<double(double)>& f, double lo,
                         double hi) {
  if (!(lo < hi)) throw InvalidArgument("bracket requires lo < hi");
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo * f_hi > 0.0) {
    throw InvalidArgument("root not bracketed: f has the same sign at both ends");
  }
  return {lo, hi, f_lo, f_hi};
}

double find_root(const std::function<double(double)>& f, RootBracket bracket,
                 double rtol) {
  if (!(bracket.lo < bracket.hi)) {
    throw InvalidArgument("bracket requires lo < hi");
  }
  if (bracket.f_lo * bracket.f_hi > 0.0) {
    throw InvalidArgument("root not bracketed: f has the same sign at both ends");
  }
  if (!(rtol > 0.0)) throw InvalidArgument("rtol must be positive");
  rtol = std::max(rtol, 4.0 * std::numeric_limits<double>::epsilon());

  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;

  double x_best = (std::abs(fa) <= std::abs(fb)) ? a : b;
  double f_best = std::min(std::abs(fa), std::abs(fb));

  for (int iter = 0; iter < 240; ++iter) {
    const double mid = 0.5 * (a + b);
    if ((b - a) <= rtol * std::max(1.0, std::abs(mid))) break;

    // Alternate secant and bisection proposals; the bisection turns keep the
    // bracket shrinking geometrically regardless of f's shape.
    double x = mid;
    if ((iter & 1) == 0) {
      const double denom = fb - fa;
      if (denom != 0.0) {
        const double sec = a - fa * (b - a) / denom;
        const double guard = 1e-3 * (b - a);
        if (sec > a + guard && sec < b - guard) x = sec;
      }
    }
    const double fx = f(x);
    if (std::abs(fx) < f_best) {
      f_best = std::abs(fx);
      x_best = x;
    }
    if (fx == 0.0) return x;
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  return x_best;
}

// ---- quadrature ----------------------------------------------------------

QuadratureRule gauss_legendre(int order) {
  if (order < 1 || order > 64) {
    throw InvalidArgument("gauss_legendre supports orders 1..64");
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.assign(static_cast<size_t>(order), 0.0);
  rule.weights.assign(static_cast<size_t>(order), 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Initial guess for the i-th largest root of P_n.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(order) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 =
            ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = -p1 / dp;
      x += dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(order - 1 - i)] = x;
    rule.weights[static_cast<size_t>(order - 1 - i)] = w;
    rule.nodes[static_cast<size_t>(i)] = -x;
    rule.weights[static_cast<size_t>(i)] = w;
  }
  if (order == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, const QuadratureRule& rule) {
  if (panels < 1) throw InvalidArgument("integrate requires panels >= 1");
  if (rule.order < 1 ||
      rule.nodes.size() != static_cast<size_t>(rule.order) ||
      rule.weights.size() != static_cast<size_t>(rule.order)) {
    throw InvalidArgument("malformed quadrature rule");
  }
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double c = lo + 0.5 * width;
    const double hw = 0.5 * width;
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i) {
      acc += rule.weights[static_cast<size_t>(i)] *
             f(c + hw * rule.nodes[static_cast<size_t>(i)]);
    }
    total += acc * hw;
  }
  return total;
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  static const QuadratureRule rule32 = gauss_legendre(32);
  return integrate(f, a, b, 8, rule32);
}

// ---- ODE integration -----------------------------------------------------

double integrate_ode_observed(
    const std::function<double(double, double)>& rhs, double t0, double t1,
    double y0, double tol,
    const std::function<void(double, double)>& observe) {
  if (!(tol > 0.0)) throw InvalidArgument("ode tolerance must be positive");
  if (t1 < t0) throw InvalidArgument("ode integration runs forward only");
  if (t1 == t0) return y0;

  // Dormand-Prince 5(4) coefficients.
  constexpr double a21 = 1.0 / 5.0;
  constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                   a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                   a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                   a65 = -5103.0 / 18656.0;
  constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                   b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
  constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
  constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
  constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
  constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
  constexpr double e7 = -1.0 / 40.0;

  double t = t0;
  double y = y0;
  double h = (t1 - t0) * 0.01;
  double k1 = rhs(t, y);
  if (observe) observe(t, y);
  long steps = 0;
  while (t < t1) {
    if (++steps > 20000000L) {
      throw NumericalError("adaptive integrator exceeded its step budget");
    }
    if (!(h > 1e-14 * std::max(1.0, std::abs(t)))) {
      throw NumericalError("step size underflow in adaptive integrator");
    }
    bool final_step = false;
    if (t + h >= t1) {
      h = t1 - t;
      final_step = true;
    }
    const double k2 = rhs(t + h * a21, y + h * (a21 * k1));
    const double k3 = rhs(t + h * (3.0 / 10.0), y + h * (a31 * k1 + a32 * k2));
    const double k4 =
        rhs(t + h * (4.0 / 5.0), y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 =
        rhs(t + h * (8.0 / 9.0),
            y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 =
        rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 +
                            a65 * k5));
    const double y5 =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = rhs(t + h, y5);
    const double err_raw =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double sc = tol * (1.0 + std::max(std::abs(y), std::abs(y5)));
    const double ratio = std::abs(err_raw) / sc;
    if (ratio <= 1.0) {
      t = final_step ? t1 : t + h;
      y = y5;
      k1 = k7;  // FSAL
      if (observe) observe(t, y);
    }
    const double grow =
        (ratio > 0.0) ? 0.9 * std::pow(ratio, -0.2) : 5.0;
    h *= std::clamp(grow, 0.2, 5.0);
  }
  return y;
}

double integrate_ode(const std::function<double(double, double)>& rhs,
                     double t0, double t1, double y0, double tol) {
  return integrate_ode_observed(rhs, t0, t1, y0, tol, nullptr);
}

// ---- dense linear algebra ------------------------------------------------

namespace {

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>;

Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
  return RowMajorMap(m.data.data(), m.rows, m.cols);
}

void check_square_pair(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.rows != A.cols || B.rows != B.cols || A.rows != B.rows || A.rows < 1) {
    throw InvalidArgument("generalized eigenproblem requires square matrices of equal size");
  }
}

}  // namespace

std::vector<double> real_generalized_eigenvalues(const DenseMatrix& A,
                                                 const DenseMatrix& B) {
  check_square_pair(A, B);
  const Eigen::MatrixXd ea = to_eigen(A);
  const Eigen::MatrixXd eb = to_eigen(B);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(eb);
  const double b_norm = eb.cwiseAbs().rowwise().sum().maxCoeff();
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot > 1e-13 * b_norm)) {
    throw NumericalError("matrix B is singular to working precision");
  }
  const Eigen::MatrixXd reduced = lu.solve(ea);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(reduced, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue QR iteration failed to converge");
  }
  std::vector<double> out;
  out.reserve(static_cast<size_t>(A.rows));
  for (int i = 0; i < A.rows; ++i) {
    const std::complex<double> z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) <= 1e-8 * std::max(1.0, std::abs(z.real()))) {
      out.push_back(z.real());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> inverse_iteration_eigenvector(const DenseMatrix& A,
                                                  const DenseMatrix& B,
                                                  double h) {
  check_square_pair(A, B);
  const Eigen::MatrixXd ea = to_eigen(A);
  const Eigen::MatrixXd eb = to_eigen(B);
  const int n = A.rows;

  const double a_norm = ea.cwiseAbs().rowwise().sum().maxCoeff();
  const double b_norm = eb.cwiseAbs().rowwise().sum().maxCoeff();
  const double scale = a_norm + std::abs(h) * b_norm;

  // Shift slightly if (A - h B) is numerically singular; inverse iteration
  // only converges faster that close to the eigenvalue.
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  double shift = 0.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    lu.compute(ea - (h + shift) * eb);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot > 1e-14 * std::max(1.0, scale)) break;
    shift = (shift == 0.0) ? 1e-11 * std::max(1.0, std::abs(h))
                           : shift * 32.0;
  }

  Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
  for (int sweep = 0; sweep < 10; ++sweep) {
    Eigen::VectorXd w = lu.solve(eb * v);
    const double norm = w.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw NumericalError("inverse iteration produced a degenerate vector");
    }
    v = w / norm;
    const double residual = (ea * v - h * (eb * v)).norm();
    if (residual <= 1e-8 * scale) {
      int imax = 0;
      v.cwiseAbs().maxCoeff(&imax);
      if (v(imax) < 0.0) v = -v;
      return std::vector<double>(v.data(), v.data() + n);
    }
  }
  throw NumericalError("inverse iteration failed to reach the residual target");
}

}  // namespace ellipsoid::numerics
