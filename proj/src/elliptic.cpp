#include "ellipsoid/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace ellipsoid::elliptic {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

void validate_modulus(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw InvalidArgument("elliptic modulus must satisfy 0 <= k < 1, got k=" +
                          std::to_string(k));
  }
}

}  // namespace

double complete_elliptic_K(double k) {
  validate_modulus(k);
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

EllipticModulus::EllipticModulus(double k_in)
    : k(k_in), k_prime(std::sqrt((1.0 - k_in) * (1.0 + k_in))) {
  validate_modulus(k);
  build_ladder();
}

EllipticModulus::EllipticModulus(double k_in, double k_prime_in)
    : k(k_in), k_prime(k_prime_in) {
  validate_modulus(k);
  if (!(k_prime > 0.0 && k_prime <= 1.0)) {
    throw InvalidArgument("complementary modulus must satisfy 0 < k' <= 1");
  }
  if (std::abs(k * k + k_prime * k_prime - 1.0) > 1e-10) {
    throw InvalidArgument("moduli must satisfy k^2 + k'^2 = 1");
  }
  build_ladder();
}

void EllipticModulus::build_ladder() {
  agm_a_.assign(1, 1.0);
  agm_r_.assign(1, 0.0);
  double a = 1.0;
  double b = k_prime;
  double c = k;
  levels_ = 0;
  while (c > 1e-17 && levels_ < 40) {
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    ++levels_;
    agm_a_.push_back(a);
    agm_r_.push_back(c / a);
  }
  K = kPi / (2.0 * a);
  K_prime = (k > 0.0) ? complete_elliptic_K(k_prime)
                      : std::numeric_limits<double>::infinity();
}

double EllipticModulus::reduced_amplitude(double x) const {
  // Descending Landen: phi_M = 2^M a_M x, then
  // phi_{i-1} = (phi_i + asin((c_i/a_i) sin phi_i)) / 2 down to phi_0.
  double phi = std::ldexp(agm_a_[static_cast<size_t>(levels_)] * x, levels_);
  for (int i = levels_; i >= 1; --i) {
    const double s =
        std::clamp(agm_r_[static_cast<size_t>(i)] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }
  return phi;
}

JacobiValues EllipticModulus::jacobi(double t) const {
  double sn_sign = 1.0;
  double cn_sign = 1.0;
  double x = t;
  if (x < 0.0) {
    x = -x;
    sn_sign = -sn_sign;
  }
  const double period = 4.0 * K;
  if (x >= period) x = std::fmod(x, period);
  if (x >= 2.0 * K) {
    x -= 2.0 * K;
    sn_sign = -sn_sign;
    cn_sign = -cn_sign;
  }
  if (x > K) {
    x = 2.0 * K - x;
    cn_sign = -cn_sign;
  }
  const double phi = reduced_amplitude(x);
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // dn^2 = k'^2 + k^2 cn^2 avoids cancellation for sn near 1.
  const double dn = std::sqrt(k_prime * k_prime + k * k * cn * cn);
  return {sn_sign * sn, cn_sign * cn, dn};
}

double EllipticModulus::amplitude(double t) const {
  const double slack = 1e-12 * std::max(1.0, K);
  if (!(t >= -slack && t <= K + slack)) {
    throw InvalidArgument("amplitude requires 0 <= t <= K(k)");
  }
  return reduced_amplitude(std::clamp(t, 0.0, K));
}

namespace {

const EllipticModulus& cached_modulus(double k) {
  thread_local double last_k = -1.0;
  thread_local std::optional<EllipticModulus> mod;
  if (!mod || last_k != k) {
    mod.emplace(k);
    last_k = k;
  }
  return *mod;
}

}  // namespace

JacobiValues jacobi_sn_cn_dn(double t, double k) {
  return cached_modulus(k).jacobi(t);
}

double jacobi_am(double t, double k) { return cached_modulus(k).amplitude(t); }

}  // namespace ellipsoid::elliptic
