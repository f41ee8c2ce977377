#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/numerics.hpp"
#include "oracles.hpp"

using ellipsoid::numerics::DenseMatrix;

TEST_SUITE("numerics") {

TEST_CASE("root finding reproduces sqrt(2)") {
  auto f = [](double x) { return x * x - 2.0; };
  const auto bracket = ellipsoid::numerics::make_bracket(f, 1.0, 2.0);
  const double root = ellipsoid::numerics::find_root(f, bracket, 1e-15);
  CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("make_bracket rejects an unbracketed interval") {
  auto f = [](double x) { return x * x + 1.0; };
  CHECK_THROWS_AS(ellipsoid::numerics::make_bracket(f, 0.0, 1.0),
                  ellipsoid::InvalidArgument);
}

TEST_CASE("Gauss-Legendre rules integrate monomials exactly") {
  for (int order : {2, 4, 8, 16, 32}) {
    const auto rule = ellipsoid::numerics::gauss_legendre(order);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      weight_sum += rule.weights[i];
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for polynomial degree up to 2*order - 1.
    for (int degree = 0; degree <= 2 * order - 1; ++degree) {
      double value = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        value += rule.weights[i] * std::pow(rule.nodes[i], degree);
      }
      const double exact =
          (degree % 2 == 1) ? 0.0 : 2.0 / (degree + 1);
      CHECK(std::abs(value - exact) < 1e-13);
    }
  }
}

TEST_CASE("quadrature matches a Romberg reference on smooth integrands") {
  auto f1 = [](double x) { return std::exp(std::cos(3.0 * x)); };
  auto f2 = [](double x) { return 1.0 / (1.0 + x * x); };
  const double lib1 = ellipsoid::numerics::integrate(f1, 0.0, 2.0);
  const double lib2 = ellipsoid::numerics::integrate(f2, -1.0, 3.0);
  CHECK(lib1 == doctest::Approx(oracle::romberg(f1, 0.0, 2.0)).epsilon(1e-13));
  CHECK(lib2 == doctest::Approx(oracle::romberg(f2, -1.0, 3.0)).epsilon(1e-13));
}

TEST_CASE("adaptive ODE integration matches an exact solution") {
  // y' = y cos(t), y(0) = 1 has the solution exp(sin t).
  auto rhs = [](double t, double y) { return y * std::cos(t); };
  const double got = ellipsoid::numerics::integrate_ode(rhs, 0.0, 3.5, 1.0,
                                                        1e-12);
  CHECK(got == doctest::Approx(std::exp(std::sin(3.5))).epsilon(1e-10));

  // Cross-check a non-elementary case against fixed-step RK4.
  auto rhs2 = [](double t, double y) {
    return std::sin(t * t) - 0.3 * y;
  };
  const double adaptive =
      ellipsoid::numerics::integrate_ode(rhs2, 0.0, 2.0, 0.7, 1e-12);
  const double fixed = oracle::rk4(rhs2, 0.0, 2.0, 0.7, 20000);
  CHECK(adaptive == doctest::Approx(fixed).epsilon(1e-9));
}

TEST_CASE("ODE integration rejects reversed intervals") {
  auto rhs = [](double, double y) { return y; };
  CHECK_THROWS_AS(ellipsoid::numerics::integrate_ode(rhs, 1.0, 0.0, 1.0, 1e-10),
                  ellipsoid::InvalidArgument);
}

TEST_CASE("observed ODE integration reports monotone times") {
  auto rhs = [](double t, double y) { return y * std::cos(t); };
  std::vector<double> times;
  const double got = ellipsoid::numerics::integrate_ode_observed(
      rhs, 0.0, 3.0, 1.0, 1e-11,
      [&](double t, double) { times.push_back(t); });
  CHECK(got == doctest::Approx(std::exp(std::sin(3.0))).epsilon(1e-9));
  REQUIRE(times.size() >= 2);
  CHECK(times.front() == doctest::Approx(0.0));
  CHECK(times.back() == doctest::Approx(3.0));
  for (std::size_t i = 1; i < times.size(); ++i) {
    CHECK(times[i] >= times[i - 1]);
  }
}

TEST_CASE("generalized eigenvalues match a Jacobi-rotation reference") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const int n = 6;

  DenseMatrix A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double value = uniform(rng);
      A(i, j) = value;
      A(j, i) = value;
    }
  }

  SUBCASE("identity mass matrix") {
    DenseMatrix B(n, n);
    for (int i = 0; i < n; ++i) B(i, i) = 1.0;
    const auto got = ellipsoid::numerics::real_generalized_eigenvalues(A, B);
    const auto expected = oracle::jacobi_symmetric_eigenvalues(A);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-11));
    }
  }

  SUBCASE("positive definite mass matrix") {
    // B = M M^T + n I is symmetric positive definite.
    DenseMatrix M(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M(i, j) = uniform(rng);
    }
    DenseMatrix B(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double sum = (i == j) ? static_cast<double>(n) : 0.0;
        for (int k = 0; k < n; ++k) sum += M(i, k) * M(j, k);
        B(i, j) = sum;
      }
    }
    const auto got = ellipsoid::numerics::real_generalized_eigenvalues(A, B);
    const auto expected = oracle::generalized_symmetric_eigenvalues(A, B);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("singular mass matrices are rejected") {
  DenseMatrix A(2, 2);
  A(0, 0) = 1.0;
  A(1, 1) = 2.0;
  DenseMatrix B(2, 2);  // all zeros: singular
  CHECK_THROWS_AS(ellipsoid::numerics::real_generalized_eigenvalues(A, B),
                  ellipsoid::NumericalError);
}

TEST_CASE("inverse iteration produces a normalized eigenvector") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const int n = 5;
  DenseMatrix A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double value = uniform(rng);
      A(i, j) = value;
      A(j, i) = value;
    }
  }
  DenseMatrix B(n, n);
  for (int i = 0; i < n; ++i) B(i, i) = 1.0 + 0.1 * i;

  const auto eigenvalues =
      ellipsoid::numerics::real_generalized_eigenvalues(A, B);
  REQUIRE(!eigenvalues.empty());
  for (double h : eigenvalues) {
    const auto u = ellipsoid::numerics::inverse_iteration_eigenvector(A, B, h);
    REQUIRE(u.size() == static_cast<std::size_t>(n));
    double norm = 0.0;
    double largest = 0.0;
    for (double x : u) {
      norm += x * x;
      if (std::abs(x) > std::abs(largest)) largest = x;
    }
    CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(largest > 0.0);
    // Residual ||(A - h B) u|| should be tiny relative to the data scale.
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        row += (A(i, j) - h * B(i, j)) * u[static_cast<std::size_t>(j)];
      }
      residual += row * row;
    }
    CHECK(std::sqrt(residual) < 1e-7 * (1.0 + std::abs(h)));
  }
}

}  // TEST_SUITE
