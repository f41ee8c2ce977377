#pragma once

#include <vector>

#include "ellipsoid/errors.hpp"

namespace ellipsoid::elliptic {

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

// Complete elliptic integral of the first kind K(k), evaluated with the
// arithmetic-geometric mean. Requires 0 <= k < 1.
double complete_elliptic_K(double k);

// A modulus k together with its complementary modulus, quarter periods and
// the precomputed Landen/AGM ladder used to evaluate the Jacobi functions.
// Immutable after construction, safe to share across threads.
class EllipticModulus {
 public:
  // k' is derived as sqrt(1 - k^2).
  explicit EllipticModulus(double k);
  // Both moduli given explicitly (useful when k and k' are known exactly
  // from axis data); they must satisfy k^2 + k'^2 = 1 to 1e-10.
  EllipticModulus(double k, double k_prime);

  double k = 0.0;
  double k_prime = 1.0;
  double K = 0.0;        // quarter period K(k)
  double K_prime = 0.0;  // K(k'); +infinity when k = 0

  // sn, cn, dn at any real t (quasi-periodic reduction to [0, K]).
  JacobiValues jacobi(double t) const;

  // Amplitude am(t, k) for t in [0, K] only; am(0) = 0, am(K) = pi/2.
  double amplitude(double t) const;

 private:
  void build_ladder();
  double reduced_amplitude(double x) const;  // x in [0, K]

  std::vector<double> agm_a_;  // a_i, i = 0..levels
  std::vector<double> agm_r_;  // c_i / a_i, i = 1..levels (index 0 unused)
  int levels_ = 0;
};

// Convenience wrappers; cache the ladder for the most recent k per thread.
JacobiValues jacobi_sn_cn_dn(double t, double k);
double jacobi_am(double t, double k);

}  // namespace ellipsoid::elliptic
