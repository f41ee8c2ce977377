#include <cmath>

#include "doctest.h"
#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/sphere_perturbation.hpp"
#include "ellipsoid/system.hpp"

namespace geo = ellipsoid::geometry;
namespace ec = ellipsoid::eigencurves;
namespace per = ellipsoid::sphere_perturbation;

TEST_SUITE("sphere_perturbation") {

TEST_CASE("degree-2 shifts at the symmetric modulus") {
  const double k = std::sqrt(0.5);
  const auto plus = per::lame_l2(k, true);
  const auto minus = per::lame_l2(k, false);
  CHECK(plus.shift == doctest::Approx(1.5773502691896255).epsilon(1e-14));
  CHECK(minus.shift == doctest::Approx(0.42264973081037427).epsilon(1e-14));
  CHECK(plus.h == doctest::Approx(1.2679491924311228).epsilon(1e-14));
  CHECK(minus.h == doctest::Approx(4.732050807568877).epsilon(1e-14));
  CHECK(plus.h < minus.h);  // plus branch is the nodeless ground mode
}

TEST_CASE("polynomial modes satisfy the degree-2 equation identically") {
  for (double k2 : {0.3, 0.5, 0.7}) {
    const double k = std::sqrt(k2);
    CHECK(per::lame_l2_residual(k, true) < 1e-12);
    CHECK(per::lame_l2_residual(k, false) < 1e-12);
  }
}

TEST_CASE("sphere curves at lambda = 6 hit the polynomial eigenvalues") {
  const double k = std::sqrt(0.5);
  const ec::Solver solver(ellipsoid::SeparatedSystem::from_sphere_modulus(k));
  const geo::Parity even = geo::make_parity(0, 0, 0);
  const double h0 = solver.value({ec::Family::LowerH, 0, even}, 6.0,
                                 ec::Backend::Galerkin);
  const double h1 = solver.value({ec::Family::LowerH, 1, even}, 6.0,
                                 ec::Backend::Galerkin);
  CHECK(h0 == doctest::Approx(per::lame_l2(k, true).h).epsilon(1e-10));
  CHECK(h1 == doctest::Approx(per::lame_l2(k, false).h).epsilon(1e-10));
}

TEST_CASE("quadrature derivatives at the reference modulus") {
  const double k = std::sqrt(0.625);
  const geo::Parity even = geo::make_parity(0, 0, 0);

  const auto d01 = per::perturbation_derivative_quadrature(k, 0, 1, even);
  CHECK(d01.lambda_prime == doctest::Approx(-1.5).epsilon(1e-9));
  CHECK(d01.consistency < 1e-8);
  CHECK(d01.dh_dlambda > 0.0);
  CHECK(d01.dh_dlambda < 0.625);
  CHECK(d01.dH_dlambda > 0.625);
  CHECK(d01.dH_dlambda < 1.0);

  const auto d10 = per::perturbation_derivative_quadrature(k, 1, 0, even);
  CHECK(d10.lambda_prime == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(d10.consistency < 1e-8);
}

TEST_CASE("closed forms match the quadrature route across moduli") {
  for (double k2 : {0.35, 0.5, 0.625, 0.8}) {
    const double k = std::sqrt(k2);
    const geo::Parity even = geo::make_parity(0, 0, 0);
    for (auto [m, n] : {std::pair{0, 1}, {1, 0}}) {
      const double closed = per::closed_form_lambda_prime_l2(k, m, n);
      const auto quad = per::perturbation_derivative_quadrature(k, m, n, even);
      CHECK(closed == doctest::Approx(quad.lambda_prime).epsilon(1e-9));
    }
  }
  const double k_half = std::sqrt(0.5);
  CHECK(per::closed_form_lambda_prime_l2(k_half, 0, 1) ==
        doctest::Approx(-0.9897433186107869).epsilon(1e-12));
  CHECK(per::closed_form_lambda_prime_l2(k_half, 1, 0) ==
        doctest::Approx(0.9897433186107869).epsilon(1e-12));
  CHECK_THROWS_AS(per::closed_form_lambda_prime_l2(k_half, 0, 0),
                  ellipsoid::InvalidArgument);
  CHECK_THROWS_AS(per::closed_form_lambda_prime_l2(k_half, 1, 1),
                  ellipsoid::InvalidArgument);
}

TEST_CASE("swapping to the complementary modulus mirrors the derivative") {
  for (double k2 : {0.3, 0.55, 0.7}) {
    const double k = std::sqrt(k2);
    const double kp = std::sqrt(1.0 - k2);
    CHECK(per::closed_form_lambda_prime_l2(k, 0, 1) ==
          doctest::Approx(-per::closed_form_lambda_prime_l2(kp, 1, 0))
              .epsilon(1e-13));
  }
}

TEST_CASE("finite differences confirm the derivative at the symmetric point") {
  const double k = std::sqrt(0.5);
  const geo::Parity even = geo::make_parity(0, 0, 0);
  for (auto [m, n] : {std::pair{0, 1}, {1, 0}}) {
    const double fd = per::perturbation_derivative_fd(k, m, n, even);
    const double closed = per::closed_form_lambda_prime_l2(k, m, n);
    CHECK(fd == doctest::Approx(closed).epsilon(1e-4));
  }
}

TEST_CASE("the deformation eigenvalue is differentiable through eps = 0") {
  const double k = std::sqrt(0.625);
  const geo::Parity even = geo::make_parity(0, 0, 0);
  const double eps = 1e-4;
  for (auto [m, n] : {std::pair{0, 1}, {1, 0}}) {
    const double slope = per::closed_form_lambda_prime_l2(k, m, n);
    const double forward = per::lambda_epsilon(k, eps, m, n, even);
    const double backward = per::lambda_epsilon(k, -eps, m, n, even);
    CHECK(std::abs(forward - (6.0 + slope * eps)) < 1e-6);
    CHECK(std::abs(backward - (6.0 - slope * eps)) < 1e-6);
    CHECK(per::lambda_epsilon(k, 0.0, m, n, even) ==
          doctest::Approx(6.0).epsilon(1e-9));
  }
}

}  // TEST_SUITE
