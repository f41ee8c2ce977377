#include "ellipsoid/geometry.hpp"

#include <cmath>
#include <string>

namespace ellipsoid::geometry {

namespace {

double derived_k(double a, double b, double c) {
  return std::sqrt((a * a - b * b) / (a * a - c * c));
}

double derived_k_prime(double a, double b, double c) {
  return std::sqrt((b * b - c * c) / (a * a - c * c));
}

}  // namespace

Parity make_parity(int kappa1, int kappa2, int kappa3) {
  auto ok = [](int v) { return v == 0 || v == 1; };
  if (!ok(kappa1) || !ok(kappa2) || !ok(kappa3)) {
    throw InvalidArgument("parity bits must each be 0 or 1");
  }
  return {kappa1, kappa2, kappa3};
}

Ellipsoid::Ellipsoid(double a_in, double b_in, double c_in)
    : a(a_in),
      b(b_in),
      c(c_in),
      d(a_in * a_in / (a_in * a_in - b_in * b_in)),
      mk_(derived_k(a_in, b_in, c_in), derived_k_prime(a_in, b_in, c_in)),
      mkp_(derived_k_prime(a_in, b_in, c_in), derived_k(a_in, b_in, c_in)) {}

Ellipsoid make_ellipsoid(double a, double b, double c) {
  if (!(c > 0.0)) {
    throw InvalidArgument("semi-axes must be positive (violated: c > 0)");
  }
  if (!(b > c)) {
    throw InvalidArgument("semi-axes must be strictly ordered (violated: b > c)");
  }
  if (!(a > b)) {
    throw InvalidArgument("semi-axes must be strictly ordered (violated: a > b)");
  }
  return Ellipsoid(a, b, c);
}

double coefficient_p(const Ellipsoid& e, double s) {
  const auto jv = e.modulus_k_prime().jacobi(s);
  return std::sqrt(e.c * e.c * jv.cn * jv.cn + e.b * e.b * jv.sn * jv.sn);
}

double coefficient_q(const Ellipsoid& e, double t) {
  const auto jv = e.modulus_k().jacobi(t);
  return std::sqrt(e.a * e.a * jv.cn * jv.cn + e.b * e.b * jv.sn * jv.sn);
}

SurfacePoint chart(const Ellipsoid& e, double s, double t) {
  const auto js = e.modulus_k_prime().jacobi(s);
  const auto jt = e.modulus_k().jacobi(t);
  return {s, t, e.a * js.dn * jt.sn, e.b * js.cn * jt.cn, e.c * js.sn * jt.dn};
}

std::pair<double, double> metric_coefficients(const Ellipsoid& e, double s,
                                              double t) {
  const auto js = e.modulus_k_prime().jacobi(s);
  const auto jt = e.modulus_k().jacobi(t);
  const double k = e.k();
  const double factor = js.dn * js.dn - k * k * jt.sn * jt.sn;
  const double p = coefficient_p(e, s);
  const double q = coefficient_q(e, t);
  return {p * p * factor, q * q * factor};
}

double weight_D(const Ellipsoid& e, double s, double t) {
  const auto js = e.modulus_k_prime().jacobi(s);
  const auto jt = e.modulus_k().jacobi(t);
  const double k = e.k();
  const double factor = js.dn * js.dn - k * k * jt.sn * jt.sn;
  return coefficient_p(e, s) * coefficient_q(e, t) * factor;
}

std::pair<double, double> algebraic_coords(const Ellipsoid& e, double s,
                                           double t) {
  const auto js = e.modulus_k_prime().jacobi(s);
  const auto jt = e.modulus_k().jacobi(t);
  const double k2 = e.k() * e.k();
  return {js.dn * js.dn / k2, jt.sn * jt.sn};
}

}  // namespace ellipsoid::geometry
