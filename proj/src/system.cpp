#include "ellipsoid/system.hpp"

#include <cmath>

namespace ellipsoid {

SeparatedSystem SeparatedSystem::from_ellipsoid(const geometry::Ellipsoid& e) {
  EquationSide t_side{galerkin::t_equation_coefficients(e), e.modulus_k(),
                      e.K()};
  EquationSide s_side{galerkin::swap_for_s_equation(e), e.modulus_k_prime(),
                      e.K_prime()};
  return SeparatedSystem{e.a, e.b, e.c, false, std::move(t_side),
                         std::move(s_side)};
}

SeparatedSystem SeparatedSystem::from_sphere_modulus(double k) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw InvalidArgument("sphere separation modulus must lie in (0, 1)");
  }
  elliptic::EllipticModulus mk(k);
  elliptic::EllipticModulus mkp(mk.k_prime, k);
  EquationSide t_side{{1.0, 1.0, 1.0, k}, mk, mk.K};
  EquationSide s_side{{1.0, 1.0, 1.0, mk.k_prime}, mkp, mkp.K};
  return SeparatedSystem{1.0, 1.0, 1.0, true, std::move(t_side),
                         std::move(s_side)};
}

SeparatedSystem SeparatedSystem::from_epsilon_family(double k, double eps) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw InvalidArgument("family modulus must lie in (0, 1)");
  }
  if (eps == 0.0) return from_sphere_modulus(k);
  if (!(eps > 0.0)) {
    throw InvalidArgument(
        "eps must be non-negative; negative deformations are reached by "
        "swapping to the complementary modulus");
  }
  const double k2 = k * k;
  const double kp2 = 1.0 - k2;
  if (!(1.0 - kp2 * eps > 0.0)) {
    throw InvalidArgument("eps too large: the minor axis would collapse");
  }
  const double a = std::sqrt(1.0 + k2 * eps);
  const double b = 1.0;
  const double c = std::sqrt(1.0 - kp2 * eps);

  // Build the sides directly so both moduli stay exactly (k, k') instead of
  // being re-derived from the rounded axes.
  elliptic::EllipticModulus mk(k);
  elliptic::EllipticModulus mkp(mk.k_prime, k);
  EquationSide t_side{{a, b, c, k}, mk, mk.K};
  EquationSide s_side{{c, b, a, mk.k_prime}, mkp, mkp.K};
  return SeparatedSystem{a, b, c, false, std::move(t_side),
                         std::move(s_side)};
}

}  // namespace ellipsoid
