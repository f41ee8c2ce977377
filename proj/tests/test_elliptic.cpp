#include <cmath>
#include <random>

#include "doctest.h"
#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/errors.hpp"
#include "oracles.hpp"

using ellipsoid::elliptic::EllipticModulus;

TEST_SUITE("elliptic") {

TEST_CASE("complete integral has the circular limit K(0) = pi/2") {
  CHECK(ellipsoid::elliptic::complete_elliptic_K(0.0) ==
        doctest::Approx(std::asin(1.0)).epsilon(1e-15));
}

TEST_CASE("complete integral matches a quadrature reference") {
  // K(k) = \int_0^{pi/2} dphi / sqrt(1 - k^2 sin^2 phi).
  for (double k2 : {0.1, 0.3, 0.5, 0.625, 0.9}) {
    const double k = std::sqrt(k2);
    auto integrand = [&](double phi) {
      const double s = std::sin(phi);
      return 1.0 / std::sqrt(1.0 - k2 * s * s);
    };
    const double reference = oracle::romberg(integrand, 0.0, std::asin(1.0));
    CHECK(ellipsoid::elliptic::complete_elliptic_K(k) ==
          doctest::Approx(reference).epsilon(1e-13));
  }
}

TEST_CASE("quarter periods at the reference modulus k^2 = 5/8") {
  const EllipticModulus mod(std::sqrt(0.625));
  CHECK(mod.K == doctest::Approx(1.9775352502356116).epsilon(1e-14));
  CHECK(mod.K_prime == doctest::Approx(1.7605688117719547).epsilon(1e-14));
  CHECK(mod.k * mod.k + mod.k_prime * mod.k_prime ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("modulus construction is validated") {
  CHECK_THROWS_AS(EllipticModulus(1.0), ellipsoid::InvalidArgument);
  CHECK_THROWS_AS(EllipticModulus(-0.1), ellipsoid::InvalidArgument);
  CHECK_THROWS_AS(EllipticModulus(1.5), ellipsoid::InvalidArgument);
  // Paired constructor insists on k^2 + k'^2 = 1.
  CHECK_THROWS_AS(EllipticModulus(0.6, 0.9), ellipsoid::InvalidArgument);
  CHECK_NOTHROW(EllipticModulus(0.6, 0.8));
}

TEST_CASE("Jacobi functions agree with a Taylor-series reference") {
  std::mt19937 rng(123456);
  std::uniform_real_distribution<double> t_dist(-8.0, 8.0);
  std::uniform_real_distribution<double> k2_dist(0.02, 0.95);
  for (int trial = 0; trial < 300; ++trial) {
    const double t = t_dist(rng);
    const double k = std::sqrt(k2_dist(rng));
    const EllipticModulus mod(k);
    const auto got = mod.jacobi(t);
    const auto expected = oracle::jacobi_reference(t, k);
    CHECK(std::abs(got.sn - expected.sn) < 1e-12);
    CHECK(std::abs(got.cn - expected.cn) < 1e-12);
    CHECK(std::abs(got.dn - expected.dn) < 1e-12);
  }
}

TEST_CASE("quarter-period values are exact") {
  const EllipticModulus mod(std::sqrt(0.625));
  const auto at_zero = mod.jacobi(0.0);
  CHECK(at_zero.sn == doctest::Approx(0.0));
  CHECK(at_zero.cn == doctest::Approx(1.0));
  CHECK(at_zero.dn == doctest::Approx(1.0));
  const auto at_K = mod.jacobi(mod.K);
  CHECK(at_K.sn == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(at_K.cn) < 1e-13);
  CHECK(at_K.dn == doctest::Approx(mod.k_prime).epsilon(1e-13));
}

TEST_CASE("amplitude is monotone with sin(am) = sn on [0, K]") {
  const EllipticModulus mod(std::sqrt(0.5));
  CHECK(mod.amplitude(0.0) == doctest::Approx(0.0));
  CHECK(mod.amplitude(mod.K) == doctest::Approx(std::asin(1.0)).epsilon(1e-12));
  double previous = -1.0;
  for (int i = 0; i <= 40; ++i) {
    const double t = mod.K * i / 40.0;
    const double am = mod.amplitude(t);
    CHECK(am > previous);
    previous = am;
    CHECK(std::sin(am) == doctest::Approx(mod.jacobi(t).sn).epsilon(1e-12));
    CHECK(std::cos(am) == doctest::Approx(mod.jacobi(t).cn).epsilon(1e-12));
  }
}

TEST_CASE("zero modulus reduces to circular functions") {
  const EllipticModulus mod(0.0);
  for (double t : {-2.0, -0.4, 0.0, 0.7, 1.3, 3.0}) {
    const auto v = mod.jacobi(t);
    CHECK(v.sn == doctest::Approx(std::sin(t)).epsilon(1e-14));
    CHECK(v.cn == doctest::Approx(std::cos(t)).epsilon(1e-14));
    CHECK(v.dn == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("free-function wrappers match the class methods") {
  const double k = std::sqrt(0.37);
  const EllipticModulus mod(k);
  for (double t : {0.15, 0.9, 1.4}) {
    const auto a = ellipsoid::elliptic::jacobi_sn_cn_dn(t, k);
    const auto b = mod.jacobi(t);
    CHECK(a.sn == doctest::Approx(b.sn).epsilon(1e-15));
    CHECK(a.cn == doctest::Approx(b.cn).epsilon(1e-15));
    CHECK(a.dn == doctest::Approx(b.dn).epsilon(1e-15));
    CHECK(ellipsoid::elliptic::jacobi_am(t, k) ==
          doctest::Approx(mod.amplitude(t)).epsilon(1e-14));
  }
}

}  // TEST_SUITE
