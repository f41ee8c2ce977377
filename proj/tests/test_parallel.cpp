#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/spectrum.hpp"
#include "ellipsoid/system.hpp"

namespace ec = ellipsoid::eigencurves;
namespace geo = ellipsoid::geometry;
namespace sp = ellipsoid::spectrum;

namespace {

bool bit_equal(double x, double y) {
  return std::memcmp(&x, &y, sizeof x) == 0;
}

// NaN-aware bitwise comparison of every field of two spectrum listings.
void require_identical(const std::vector<sp::SpectrumEntry>& seq,
                       const std::vector<sp::SpectrumEntry>& par) {
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].m == par[i].m);
    CHECK(seq[i].n == par[i].n);
    CHECK(seq[i].parity == par[i].parity);
    CHECK(seq[i].sphere_l == par[i].sphere_l);
    CHECK(seq[i].degeneracy == par[i].degeneracy);
    CHECK(bit_equal(seq[i].lambda, par[i].lambda));
    CHECK(bit_equal(seq[i].h, par[i].h));
    const bool rg_equal =
        bit_equal(seq[i].residual_galerkin, par[i].residual_galerkin) ||
        (std::isnan(seq[i].residual_galerkin) &&
         std::isnan(par[i].residual_galerkin));
    const bool rp_equal =
        bit_equal(seq[i].residual_prufer, par[i].residual_prufer) ||
        (std::isnan(seq[i].residual_prufer) &&
         std::isnan(par[i].residual_prufer));
    CHECK(rg_equal);
    CHECK(rp_equal);
  }
}

}  // namespace

TEST_SUITE("parallel") {

TEST_CASE("parallel enumeration reproduces the serial listing bit for bit") {
  const ec::Solver solver(ellipsoid::SeparatedSystem::from_ellipsoid(
      geo::make_ellipsoid(3.0, 2.0, 1.0)));
  const auto serial =
      sp::enumerate_spectrum_serial(solver, 20.0, ec::Backend::Both);
  const auto parallel =
      sp::enumerate_spectrum(solver, 20.0, ec::Backend::Both, 4);
  require_identical(serial, parallel);
  REQUIRE(serial.size() >= 10);
}

TEST_CASE("thread counts do not influence the result") {
  const ec::Solver solver(ellipsoid::SeparatedSystem::from_ellipsoid(
      geo::make_ellipsoid(3.0, 2.0, 1.0)));
  const auto one = sp::enumerate_spectrum(solver, 12.0, ec::Backend::Galerkin, 1);
  const auto four = sp::enumerate_spectrum(solver, 12.0, ec::Backend::Galerkin, 4);
  require_identical(one, four);
}

TEST_CASE("a warm cache does not change subsequent runs") {
  const ec::Solver solver(ellipsoid::SeparatedSystem::from_ellipsoid(
      geo::make_ellipsoid(3.0, 2.0, 1.0)));
  const auto cold = sp::enumerate_spectrum(solver, 8.0, ec::Backend::Galerkin, 2);
  const auto warm = sp::enumerate_spectrum(solver, 8.0, ec::Backend::Galerkin, 2);
  require_identical(cold, warm);
}

}  // TEST_SUITE
