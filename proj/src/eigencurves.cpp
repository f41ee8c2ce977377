#include "ellipsoid/eigencurves.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "ellipsoid/errors.hpp"

namespace ellipsoid::eigencurves {

Solver::Solver(SeparatedSystem system, int default_N)
    : system_(std::move(system)), default_N_(default_N) {
  if (default_N_ < 4) {
    throw InvalidArgument("default basis cutoff must be at least 4");
  }
}

Solver::SideBinding Solver::bind(const EigencurveId& id) const {
  if (id.index < 0) throw InvalidArgument("curve index must be non-negative");
  if (id.family == Family::LowerH) {
    return {0, id.parity.kappa1, id.parity.kappa2};
  }
  return {1, id.parity.kappa3, id.parity.kappa2};
}

const EquationSide& Solver::side(int side_index) const {
  return side_index == 0 ? system_.t_side : system_.s_side;
}

int Solver::basis_cutoff(const EigencurveId& id) const {
  const SideBinding b = bind(id);
  const galerkin::BasisFamily family =
      galerkin::basis_for(b.kappa_left, b.kappa_right);
  const int trusted_default =
      std::max(1, galerkin::family_dimension(family, default_N_) / 2);
  if (id.index < trusted_default) return default_N_;
  return std::max(default_N_, 4 * id.index + 16);
}

const galerkin::GalerkinOperator& Solver::op_for(
    int side_index, galerkin::BasisFamily family, int N) const {
  const OpKey key{side_index, static_cast<int>(family), N};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = ops_.find(key);
    if (it != ops_.end()) return it->second;
  }
  galerkin::GalerkinOperator op =
      galerkin::assemble(side(side_index).coeffs, family, N);
  std::lock_guard<std::mutex> lock(mutex_);
  // Another thread may have inserted the identical operator meanwhile;
  // emplace keeps the first copy either way.
  auto [it, inserted] = ops_.emplace(key, std::move(op));
  return it->second;
}

std::vector<double> Solver::spectrum_for(int side_index,
                                         galerkin::BasisFamily family, int N,
                                         double lambda) const {
  const SpectrumKey key{side_index, static_cast<int>(family), N,
                        std::bit_cast<std::int64_t>(lambda)};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = spectra_.find(key);
    if (it != spectra_.end()) return it->second;
  }
  const galerkin::GalerkinOperator& op = op_for(side_index, family, N);
  galerkin::HSpectrum spectrum = galerkin::eigenvalues_h(op, lambda);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = spectra_.emplace(key, std::move(spectrum.values));
  return it->second;
}

double Solver::raw_galerkin(const SideBinding& b, int index, double lambda,
                            int N) const {
  const galerkin::BasisFamily family =
      galerkin::basis_for(b.kappa_left, b.kappa_right);
  const std::vector<double> values =
      spectrum_for(b.side, family, N, lambda);
  if (index >= static_cast<int>(values.size())) {
    throw NumericalError("matrix spectrum too short for curve index " +
                         std::to_string(index));
  }
  return values[static_cast<size_t>(index)];
}

double Solver::raw_prufer(const SideBinding& b, int index, double lambda,
                          std::optional<double> hint_h) const {
  const EquationSide& sd = side(b.side);
  prufer::PruferProblem problem{sd.coeffs, sd.modulus, sd.endpoint,
                                b.kappa_left, b.kappa_right};
  if (hint_h) {
    const double pad = std::max(1.0, 0.1 * std::abs(*hint_h));
    return prufer::shoot_h(problem, index, lambda, *hint_h - pad,
                           *hint_h + pad);
  }
  return prufer::shoot_h(problem, index, lambda);
}

double Solver::value(const EigencurveId& id, double lambda, Backend backend,
                     std::optional<double> hint) const {
  if (backend == Backend::Both) {
    throw InvalidArgument(
        "a curve value is computed by one backend; combine the two routes at "
        "the call site");
  }
  const SideBinding b = bind(id);
  const bool upper = id.family == Family::UpperH;
  double raw;
  if (backend == Backend::Galerkin) {
    raw = raw_galerkin(b, id.index, lambda, basis_cutoff(id));
  } else {
    // For the upper family the hint refers to H = lambda - g.
    std::optional<double> hint_raw;
    if (hint) hint_raw = upper ? lambda - *hint : *hint;
    raw = raw_prufer(b, id.index, lambda, hint_raw);
  }
  return upper ? lambda - raw : raw;
}

Sample Solver::evaluate(const EigencurveId& id, double lambda,
                        Backend backend, std::optional<double> hint) const {
  Sample sample;
  sample.lambda = lambda;
  sample.backend = backend;
  sample.value = value(id, lambda, backend, hint);

  const SideBinding b = bind(id);
  const bool upper = id.family == Family::UpperH;
  const double raw = upper ? lambda - sample.value : sample.value;
  if (backend == Backend::Galerkin) {
    const galerkin::BasisFamily family =
        galerkin::basis_for(b.kappa_left, b.kappa_right);
    const galerkin::GalerkinOperator& op =
        op_for(b.side, family, basis_cutoff(id));
    sample.residual = galerkin::eigenfunction(op, lambda, id.index).residual;
  } else {
    const EquationSide& sd = side(b.side);
    prufer::PruferProblem problem{sd.coeffs, sd.modulus, sd.endpoint,
                                  b.kappa_left, b.kappa_right};
    const double theta = prufer::theta_at_end(problem, raw, lambda);
    sample.residual =
        std::abs(theta - prufer::target_theta(b.kappa_right, id.index));
  }
  return sample;
}

double Solver::slope(const EigencurveId& id, double lambda,
                     Backend backend) const {
  const double step = 1e-4 * std::max(1.0, std::abs(lambda));
  const double above = value(id, lambda + step, backend);
  const double below = value(id, lambda - step, backend);
  return (above - below) / (2.0 * step);
}

}  // namespace ellipsoid::eigencurves
