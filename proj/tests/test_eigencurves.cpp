#include <cmath>
#include <cstring>
#include <optional>

#include "doctest.h"
#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/galerkin.hpp"
#include "ellipsoid/numerics.hpp"
#include "oracles.hpp"

namespace ec = ellipsoid::eigencurves;
namespace geo = ellipsoid::geometry;
namespace gal = ellipsoid::galerkin;

namespace {

const ec::Solver& reference_solver() {
  static const ec::Solver solver(
      ellipsoid::SeparatedSystem::from_ellipsoid(
          geo::make_ellipsoid(3.0, 2.0, 1.0)));
  return solver;
}

}  // namespace

TEST_SUITE("eigencurves") {

TEST_CASE("pinned lower-curve value at lambda = 5 on both backends") {
  const auto& solver = reference_solver();
  const ec::EigencurveId id{ec::Family::LowerH, 0, geo::make_parity(0, 1, 0)};
  const double galerkin = solver.value(id, 5.0, ec::Backend::Galerkin);
  const double prufer = solver.value(id, 5.0, ec::Backend::Prufer);
  CHECK(galerkin == doctest::Approx(0.5582158815195115).epsilon(5e-11));
  CHECK(prufer == doctest::Approx(0.5582158815195115).epsilon(5e-10));
  CHECK(std::abs(galerkin - prufer) < 1e-8);
}

TEST_CASE("upper curves are the reflected swapped-equation eigenvalues") {
  const auto& solver = reference_solver();
  const auto& system = solver.system();
  const geo::Parity parity = geo::make_parity(1, 0, 1);
  const double lambda = 7.0;
  // Direct route: s-side coefficient set, basis picked by (kappa3, kappa2).
  const auto op = gal::assemble(system.s_side.coeffs,
                                gal::basis_for(parity.kappa3, parity.kappa2),
                                solver.default_cutoff());
  const auto spectrum = gal::eigenvalues_h(op, lambda);
  for (int m = 0; m <= 2; ++m) {
    const ec::EigencurveId id{ec::Family::UpperH, m, parity};
    const double via_solver = solver.value(id, lambda, ec::Backend::Galerkin);
    const double direct = lambda - spectrum.values[static_cast<std::size_t>(m)];
    CHECK(via_solver == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("curve values at lambda = 0 reduce to closed trig formulas") {
  const auto& solver = reference_solver();
  const auto& system = solver.system();

  // Side lengths \int q and \int p by an independent quadrature.
  auto q_of = [&](double t) {
    const auto jv = system.t_side.modulus.jacobi(t);
    const double A2 = system.t_side.coeffs.axis_major *
                      system.t_side.coeffs.axis_major;
    const double B2 = system.t_side.coeffs.axis_mid *
                      system.t_side.coeffs.axis_mid;
    return std::sqrt(A2 * jv.cn * jv.cn + B2 * jv.sn * jv.sn);
  };
  auto p_of = [&](double s) {
    const auto jv = system.s_side.modulus.jacobi(s);
    const double C2 = system.s_side.coeffs.axis_major *
                      system.s_side.coeffs.axis_major;
    const double B2 = system.s_side.coeffs.axis_mid *
                      system.s_side.coeffs.axis_mid;
    return std::sqrt(C2 * jv.cn * jv.cn + B2 * jv.sn * jv.sn);
  };
  const double Q = oracle::romberg(q_of, 0.0, system.t_side.endpoint);
  const double P = oracle::romberg(p_of, 0.0, system.s_side.endpoint);
  const double pi = 2.0 * std::asin(1.0);

  for (int kl : {0, 1}) {
    for (int kr : {0, 1}) {
      const double sigma = 0.5 * (kl + kr);
      for (int index : {0, 1, 2}) {
        // Lower family: h_n(0) = ((n + sigma) pi / Q)^2.
        const ec::EigencurveId lower{ec::Family::LowerH, index,
                                     geo::make_parity(kl, kr, 0)};
        const double expected_lower =
            std::pow((index + sigma) * pi / Q, 2);
        CHECK(solver.value(lower, 0.0, ec::Backend::Galerkin) ==
              doctest::Approx(expected_lower).epsilon(1e-9));
        CHECK(solver.value(lower, 0.0, ec::Backend::Prufer) ==
              doctest::Approx(expected_lower).epsilon(1e-8));

        // Upper family: H_m(0) = -((m + sigma) pi / P)^2; the parity places
        // kl on the s = 0 end (kappa3) and kr on the shared end (kappa2).
        const ec::EigencurveId upper{ec::Family::UpperH, index,
                                     geo::make_parity(0, kr, kl)};
        const double expected_upper =
            -std::pow((index + sigma) * pi / P, 2);
        CHECK(solver.value(upper, 0.0, ec::Backend::Galerkin) ==
              doctest::Approx(expected_upper).epsilon(1e-9));
        CHECK(solver.value(upper, 0.0, ec::Backend::Prufer) ==
              doctest::Approx(expected_upper).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("curve slopes stay inside their separating bands") {
  const auto& solver = reference_solver();
  const double k2 = solver.system().modulus_k() * solver.system().modulus_k();
  for (int index : {0, 2}) {
    for (double lambda : {0.5, 4.0, 12.0}) {
      const ec::EigencurveId lower{ec::Family::LowerH, index,
                                   geo::make_parity(1, 0, 0)};
      const double lower_slope = solver.slope(lower, lambda, ec::Backend::Galerkin);
      CHECK(lower_slope > 0.0);
      CHECK(lower_slope < k2);

      const ec::EigencurveId upper{ec::Family::UpperH, index,
                                   geo::make_parity(0, 0, 1)};
      const double upper_slope = solver.slope(upper, lambda, ec::Backend::Galerkin);
      CHECK(upper_slope > k2);
      CHECK(upper_slope < 1.0);
    }
  }
}

TEST_CASE("lower curves increase and upper curves approach unit slope") {
  const auto& solver = reference_solver();
  const ec::EigencurveId lower{ec::Family::LowerH, 1, geo::make_parity(0, 0, 0)};
  const double h_at_0 = solver.value(lower, 0.0, ec::Backend::Galerkin);
  const double h_at_10 = solver.value(lower, 10.0, ec::Backend::Galerkin);
  CHECK(h_at_10 > h_at_0);

  const ec::EigencurveId upper{ec::Family::UpperH, 0, geo::make_parity(0, 0, 0)};
  const double slope_far =
      solver.slope(upper, 400.0, ec::Backend::Galerkin);
  const double slope_near = solver.slope(upper, 5.0, ec::Backend::Galerkin);
  CHECK(slope_far > slope_near);
  CHECK(slope_far < 1.0);
  CHECK(slope_far > 0.9);
}

TEST_CASE("basis cutoff grows with the curve index") {
  const auto& solver = reference_solver();
  const geo::Parity parity = geo::make_parity(0, 0, 0);
  const ec::EigencurveId small{ec::Family::LowerH, 2, parity};
  CHECK(solver.basis_cutoff(small) == solver.default_cutoff());
  const ec::EigencurveId large{ec::Family::LowerH, 40, parity};
  CHECK(solver.basis_cutoff(large) >= 4 * 40);
}

TEST_CASE("shooting hints never change the converged value") {
  const auto& solver = reference_solver();
  const ec::EigencurveId id{ec::Family::LowerH, 1, geo::make_parity(1, 1, 0)};
  const double plain = solver.value(id, 3.0, ec::Backend::Prufer);
  const double hinted =
      solver.value(id, 3.0, ec::Backend::Prufer, plain + 0.05);
  CHECK(std::abs(plain - hinted) < 1e-10);

  const ec::EigencurveId up{ec::Family::UpperH, 1, geo::make_parity(0, 1, 1)};
  const double up_plain = solver.value(up, 3.0, ec::Backend::Prufer);
  const double up_hinted =
      solver.value(up, 3.0, ec::Backend::Prufer, up_plain - 0.02);
  CHECK(std::abs(up_plain - up_hinted) < 1e-10);
}

TEST_CASE("the combined backend is rejected for single curve values") {
  const auto& solver = reference_solver();
  const ec::EigencurveId id{ec::Family::LowerH, 0, geo::make_parity(0, 0, 0)};
  CHECK_THROWS_AS(solver.value(id, 1.0, ec::Backend::Both),
                  ellipsoid::InvalidArgument);
}

TEST_CASE("evaluate reports the backend and a small residual") {
  const auto& solver = reference_solver();
  const ec::EigencurveId id{ec::Family::LowerH, 0, geo::make_parity(0, 1, 0)};
  const auto galerkin = solver.evaluate(id, 5.0, ec::Backend::Galerkin);
  CHECK(galerkin.lambda == doctest::Approx(5.0));
  CHECK(galerkin.backend == ec::Backend::Galerkin);
  CHECK(galerkin.value == doctest::Approx(0.5582158815195115).epsilon(1e-9));
  CHECK(galerkin.residual < 1e-9);
  const auto prufer = solver.evaluate(id, 5.0, ec::Backend::Prufer);
  CHECK(prufer.backend == ec::Backend::Prufer);
  CHECK(prufer.residual < 1e-6);
}

TEST_CASE("independently built solvers agree bit for bit") {
  const ec::Solver first(ellipsoid::SeparatedSystem::from_ellipsoid(
      geo::make_ellipsoid(3.0, 2.0, 1.0)));
  const ec::Solver second(ellipsoid::SeparatedSystem::from_ellipsoid(
      geo::make_ellipsoid(3.0, 2.0, 1.0)));
  for (double lambda : {0.0, 1.5, 6.25}) {
    for (int index : {0, 1, 3}) {
      const ec::EigencurveId id{ec::Family::LowerH, index,
                                geo::make_parity(0, 1, 1)};
      const double x = first.value(id, lambda, ec::Backend::Galerkin);
      const double y = second.value(id, lambda, ec::Backend::Galerkin);
      CHECK(std::memcmp(&x, &y, sizeof x) == 0);
    }
  }
}

}  // TEST_SUITE
