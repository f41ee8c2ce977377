#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "ellipsoid/galerkin.hpp"
#include "ellipsoid/geometry.hpp"
#include "ellipsoid/prufer.hpp"
#include "ellipsoid/system.hpp"

namespace ellipsoid::eigencurves {

// The two families of eigenvalue curves over the spectral parameter lambda:
//   LowerH: index n >= 0, the n-th eigenvalue h_n(lambda) of the t-equation
//           (boundary bits kappa1 at t = 0, kappa2 at t = K); increasing in
//           lambda with slope in (0, k^2).
//   UpperH: index m >= 0, H_m(lambda) = lambda - g_m(lambda) where g_m is
//           the m-th eigenvalue of the coefficient-swapped s-equation
//           (boundary bits kappa3 at s = 0, kappa2 at s = K'); decreasing
//           index order, slope in (k^2, 1).
// A surface eigenvalue lambda occurs exactly where H_m(lambda) =
// h_n(lambda) for the shared parity.
enum class Family { LowerH, UpperH };

struct EigencurveId {
  Family family = Family::LowerH;
  int index = 0;
  geometry::Parity parity;
};

enum class Backend { Galerkin, Prufer, Both };

struct Sample {
  double lambda = 0.0;
  double value = 0.0;
  Backend backend = Backend::Galerkin;
  // Galerkin: relative matrix residual of the eigenpair.
  // Prufer: terminal phase mismatch |theta_end - target|.
  double residual = 0.0;
};

// Evaluates eigencurves for one separated system through either backend,
// caching assembled matrices and matrix spectra. Thread-safe; results are
// deterministic and independent of cache state or thread interleaving.
class Solver {
 public:
  explicit Solver(SeparatedSystem system, int default_N = 32);

  const SeparatedSystem& system() const { return system_; }
  int default_cutoff() const { return default_N_; }

  // Basis cutoff used for this curve (grows with the curve index so that
  // the requested eigenvalue stays in the converged part of the spectrum).
  int basis_cutoff(const EigencurveId& id) const;

  // Curve value by one concrete backend (Backend::Both is rejected here;
  // combining the two routes is the caller's job). An optional hint is a
  // nearby guess of the curve value used to seed the shooting bracket of
  // the Prufer backend; it never changes the result, only the search.
  double value(const EigencurveId& id, double lambda, Backend backend,
               std::optional<double> hint = std::nullopt) const;

  Sample evaluate(const EigencurveId& id, double lambda, Backend backend,
                  std::optional<double> hint = std::nullopt) const;

  // d(value)/d(lambda) by central differences, step 1e-4 * max(1, |lambda|).
  double slope(const EigencurveId& id, double lambda, Backend backend) const;

 private:
  struct SideBinding {
    int side;  // 0 = t-side, 1 = s-side
    int kappa_left;
    int kappa_right;
  };
  SideBinding bind(const EigencurveId& id) const;
  const EquationSide& side(int side_index) const;

  const galerkin::GalerkinOperator& op_for(int side_index,
                                           galerkin::BasisFamily family,
                                           int N) const;
  std::vector<double> spectrum_for(int side_index,
                                   galerkin::BasisFamily family, int N,
                                   double lambda) const;

  double raw_galerkin(const SideBinding& b, int index, double lambda,
                      int N) const;
  double raw_prufer(const SideBinding& b, int index, double lambda,
                    std::optional<double> hint_h) const;

  SeparatedSystem system_;
  int default_N_;

  using OpKey = std::tuple<int, int, int>;                    // side, family, N
  using SpectrumKey = std::tuple<int, int, int, std::int64_t>;  // + lambda bits

  mutable std::mutex mutex_;
  mutable std::map<OpKey, galerkin::GalerkinOperator> ops_;
  mutable std::map<SpectrumKey, std::vector<double>> spectra_;
};

}  // namespace ellipsoid::eigencurves
