#pragma once

#include <utility>

#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/errors.hpp"

namespace ellipsoid::geometry {

// Parity triple (kappa1, kappa2, kappa3), each bit 0 (Neumann-type) or 1
// (Dirichlet-type). kappa1 governs t = 0, kappa2 governs t = K and s = K',
// kappa3 governs s = 0.
struct Parity {
  int kappa1 = 0;
  int kappa2 = 0;
  int kappa3 = 0;

  int weight() const { return kappa1 + kappa2 + kappa3; }
  // Binary encoding used for deterministic tie-breaking.
  int bits() const { return kappa1 * 4 + kappa2 * 2 + kappa3; }
  // Same parity with the middle bit forced to 1 (used by the eigenvalue
  // bounds for kappa2 = 0 states).
  Parity with_dirichlet_middle() const { return {kappa1, 1, kappa3}; }

  friend bool operator==(const Parity&, const Parity&) = default;
};

Parity make_parity(int kappa1, int kappa2, int kappa3);

// Triaxial ellipsoid x^2/a^2 + y^2/b^2 + z^2/c^2 = 1 with a > b > c > 0,
// carrying the derived moduli k, k' and quarter periods.
//   k^2  = (a^2 - b^2) / (a^2 - c^2)
//   k'^2 = (b^2 - c^2) / (a^2 - c^2)
class Ellipsoid {
 public:
  Ellipsoid(double a, double b, double c);

  double a, b, c;
  double d;  // a^2 / (a^2 - b^2), pole of the algebraic coordinate chart

  const elliptic::EllipticModulus& modulus_k() const { return mk_; }
  const elliptic::EllipticModulus& modulus_k_prime() const { return mkp_; }

  double k() const { return mk_.k; }
  double k_prime() const { return mkp_.k; }
  double K() const { return mk_.K; }        // quarter period of the t range
  double K_prime() const { return mkp_.K; } // quarter period of the s range

 private:
  elliptic::EllipticModulus mk_;
  elliptic::EllipticModulus mkp_;
};

Ellipsoid make_ellipsoid(double a, double b, double c);

struct SurfacePoint {
  double s, t;
  double x, y, z;
};

// Coefficient p(s) = sqrt(c^2 cn^2(s,k') + b^2 sn^2(s,k')) of the s-equation.
double coefficient_p(const Ellipsoid& e, double s);
// Coefficient q(t) = sqrt(a^2 cn^2(t,k) + b^2 sn^2(t,k)) of the t-equation.
double coefficient_q(const Ellipsoid& e, double t);

// Coordinate chart (s, t) -> (x, y, z) covering one octant for
// s in [0, K'], t in [0, K]:
//   x = a dn(s,k') sn(t,k), y = b cn(s,k') cn(t,k), z = c sn(s,k') dn(t,k).
SurfacePoint chart(const Ellipsoid& e, double s, double t);

// Diagonal metric coefficients (g1, g2) of the chart:
//   g1 = p^2 (dn^2(s,k') - k^2 sn^2(t,k)), g2 = q^2 (same factor).
std::pair<double, double> metric_coefficients(const Ellipsoid& e, double s,
                                              double t);

// Surface weight D(s,t) = p q (dn^2(s,k') - k^2 sn^2(t,k)) = sqrt(g1 g2).
double weight_D(const Ellipsoid& e, double s, double t);

// Algebraic coordinates (mu, nu) = (k^-2 dn^2(s,k'), sn^2(t,k)), with
// mu in [1, 1/k^2] and nu in [0, 1].
std::pair<double, double> algebraic_coords(const Ellipsoid& e, double s,
                                           double t);

}  // namespace ellipsoid::geometry
