#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ellipsoid/eigencurves.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/geometry.hpp"
#include "ellipsoid/output.hpp"
#include "ellipsoid/spectrum.hpp"
#include "ellipsoid/sphere_perturbation.hpp"
#include "ellipsoid/system.hpp"
#include "ellipsoid/verification.hpp"

namespace {

using ellipsoid::InvalidArgument;
using ellipsoid::NumericalError;
using ellipsoid::SeparatedSystem;
using ellipsoid::eigencurves::Backend;
using ellipsoid::eigencurves::EigencurveId;
using ellipsoid::eigencurves::Family;
using ellipsoid::eigencurves::Solver;
using ellipsoid::output::Cell;
using ellipsoid::output::Table;

struct GlobalOptions {
  std::string format = "csv";
  int threads = 0;
};

int resolve_threads(int cli_threads) {
  if (cli_threads > 0) return cli_threads;
  if (const char* env = std::getenv("ELLIPSOID_SPECTRA_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return static_cast<int>(parsed);
    }
  }
  return 0;
}

ellipsoid::geometry::Parity parity_from_string(const std::string& text) {
  if (text.size() != 3 ||
      text.find_first_not_of("01") != std::string::npos) {
    throw InvalidArgument(
        "parity must be three binary digits, e.g. 010 (kappa1 kappa2 "
        "kappa3)");
  }
  return ellipsoid::geometry::make_parity(text[0] - '0', text[1] - '0',
                                          text[2] - '0');
}

std::string parity_to_string(const ellipsoid::geometry::Parity& parity) {
  return std::to_string(parity.kappa1) + std::to_string(parity.kappa2) +
         std::to_string(parity.kappa3);
}

Backend parse_backend(const std::string& text) {
  if (text == "galerkin") return Backend::Galerkin;
  if (text == "prufer") return Backend::Prufer;
  if (text == "both") return Backend::Both;
  throw InvalidArgument("backend must be galerkin, prufer or both");
}

void emit(const GlobalOptions& global, const std::string& command,
          const std::vector<std::pair<std::string, Cell>>& parameters,
          const Table& table) {
  if (global.format == "json") {
    ellipsoid::output::write_json(std::cout, command, parameters, table);
    return;
  }
  std::vector<std::pair<std::string, std::string>> comments;
  comments.emplace_back("command", command);
  for (const auto& [key, cell] : parameters) {
    struct Visitor {
      std::string operator()(std::monostate) const { return ""; }
      std::string operator()(double v) const {
        return ellipsoid::output::format_double(v);
      }
      std::string operator()(std::int64_t v) const {
        return std::to_string(v);
      }
      std::string operator()(const std::string& v) const { return v; }
    };
    comments.emplace_back(key, std::visit(Visitor{}, cell));
  }
  ellipsoid::output::write_csv(std::cout, table, comments);
}

void report_error(const GlobalOptions& global, const std::string& kind,
                  const std::string& message) {
  if (global.format == "json") {
    ellipsoid::output::write_error_json(std::cerr, kind, message);
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  double a = 0.0, b = 0.0, c = 0.0;
  double lambda_max = 0.0;
  std::string backend = "both";
};

int run_spectrum(const GlobalOptions& global, const SpectrumArgs& args) {
  const Backend backend = parse_backend(args.backend);
  Table table;
  table.name = "spectrum";
  table.columns = {"m",          "n",          "kappa1",
                   "kappa2",     "kappa3",     "sphere_l",
                   "lambda",     "h",          "degeneracy",
                   "residual_galerkin", "residual_prufer"};

  if (args.lambda_max > 0.0) {
    const SeparatedSystem sys = SeparatedSystem::from_ellipsoid(
        ellipsoid::geometry::make_ellipsoid(args.a, args.b, args.c));
    const Solver solver(sys);
    const std::vector<ellipsoid::spectrum::SpectrumEntry> entries =
        ellipsoid::spectrum::enumerate_spectrum(
            solver, args.lambda_max, backend,
            resolve_threads(global.threads));
    for (const ellipsoid::spectrum::SpectrumEntry& entry : entries) {
      table.rows.push_back({static_cast<std::int64_t>(entry.m),
                            static_cast<std::int64_t>(entry.n),
                            static_cast<std::int64_t>(entry.parity.kappa1),
                            static_cast<std::int64_t>(entry.parity.kappa2),
                            static_cast<std::int64_t>(entry.parity.kappa3),
                            static_cast<std::int64_t>(entry.sphere_l),
                            entry.lambda, entry.h,
                            static_cast<std::int64_t>(entry.degeneracy),
                            entry.residual_galerkin, entry.residual_prufer});
    }
  } else {
    // Validate the axes even when no eigenvalue is below the cutoff.
    ellipsoid::geometry::make_ellipsoid(args.a, args.b, args.c);
  }

  emit(global, "spectrum",
       {{"a", args.a},
        {"b", args.b},
        {"c", args.c},
        {"lambda_max", args.lambda_max},
        {"backend", args.backend}},
       table);
  return 0;
}

// ---- eigencurve -------------------------------------------------------------

struct EigencurveArgs {
  double a = 0.0, b = 0.0, c = 0.0;
  std::string family = "lower";
  int index = 0;
  std::string parity = "000";
  std::vector<double> lambdas;
  std::string backend = "both";
};

int run_eigencurve(const GlobalOptions& global, const EigencurveArgs& args) {
  if (args.family != "lower" && args.family != "upper") {
    throw InvalidArgument("family must be lower or upper");
  }
  const Backend requested = parse_backend(args.backend);
  const SeparatedSystem sys = SeparatedSystem::from_ellipsoid(
      ellipsoid::geometry::make_ellipsoid(args.a, args.b, args.c));
  const Solver solver(sys);
  const EigencurveId id{
      args.family == "lower" ? Family::LowerH : Family::UpperH, args.index,
      parity_from_string(args.parity)};

  std::vector<Backend> backends;
  if (requested == Backend::Both) {
    backends = {Backend::Galerkin, Backend::Prufer};
  } else {
    backends = {requested};
  }

  Table table;
  table.name = "eigencurve";
  table.columns = {"family", "index",  "kappa", "lambda",
                   "backend", "value", "residual"};
  for (const double lambda : args.lambdas) {
    for (const Backend backend : backends) {
      const ellipsoid::eigencurves::Sample sample =
          solver.evaluate(id, lambda, backend);
      table.rows.push_back(
          {args.family, static_cast<std::int64_t>(args.index), args.parity,
           lambda,
           std::string(backend == Backend::Galerkin ? "galerkin" : "prufer"),
           sample.value, sample.residual});
    }
  }

  emit(global, "eigencurve",
       {{"a", args.a},
        {"b", args.b},
        {"c", args.c},
        {"family", args.family},
        {"index", static_cast<std::int64_t>(args.index)},
        {"kappa", args.parity},
        {"backend", args.backend}},
       table);
  return 0;
}

// ---- perturb ---------------------------------------------------------------

struct PerturbArgs {
  double k2 = 0.5;
  int m = 0;
  int n = 1;
  std::string parity = "000";
  double step = 1e-3;
};

int run_perturb(const GlobalOptions& global, const PerturbArgs& args) {
  if (!(args.k2 > 0.0) || !(args.k2 < 1.0)) {
    throw InvalidArgument("k2 must lie strictly between 0 and 1");
  }
  const double k = std::sqrt(args.k2);
  const ellipsoid::geometry::Parity parity =
      parity_from_string(args.parity);

  const ellipsoid::sphere_perturbation::PerturbationDerivatives quadrature =
      ellipsoid::sphere_perturbation::perturbation_derivative_quadrature(
          k, args.m, args.n, parity);
  const double finite_difference =
      ellipsoid::sphere_perturbation::perturbation_derivative_fd(
          k, args.m, args.n, parity, args.step);

  Cell closed = std::monostate{};
  if (parity.weight() == 0 &&
      ((args.m == 0 && args.n == 1) || (args.m == 1 && args.n == 0))) {
    closed = ellipsoid::sphere_perturbation::closed_form_lambda_prime_l2(
        k, args.m, args.n);
  }

  Table table;
  table.name = "perturb";
  table.columns = {"m",
                   "n",
                   "kappa",
                   "k2",
                   "dh_dlambda",
                   "dh_deps",
                   "dH_dlambda",
                   "dH_deps",
                   "lambda_prime_quadrature",
                   "lambda_prime_fd",
                   "closed_form",
                   "crossing_consistency"};
  table.rows.push_back({static_cast<std::int64_t>(args.m),
                        static_cast<std::int64_t>(args.n), args.parity,
                        args.k2, quadrature.dh_dlambda, quadrature.dh_deps,
                        quadrature.dH_dlambda, quadrature.dH_deps,
                        quadrature.lambda_prime, finite_difference, closed,
                        quadrature.consistency});

  emit(global, "perturb",
       {{"k2", args.k2},
        {"m", static_cast<std::int64_t>(args.m)},
        {"n", static_cast<std::int64_t>(args.n)},
        {"kappa", args.parity},
        {"step", args.step}},
       table);
  return 0;
}

// ---- chart -----------------------------------------------------------------

struct ChartArgs {
  double a = 0.0, b = 0.0, c = 0.0;
  int ns = 5;
  int nt = 5;
};

int run_chart(const GlobalOptions& global, const ChartArgs& args) {
  if (args.ns < 2 || args.nt < 2) {
    throw InvalidArgument("grid must have at least 2 points per direction");
  }
  const ellipsoid::geometry::Ellipsoid e =
      ellipsoid::geometry::make_ellipsoid(args.a, args.b, args.c);

  Table table;
  table.name = "chart";
  table.columns = {"s",  "t",  "x",  "y",  "z",
                   "g1", "g2", "weight", "mu", "nu", "surface_residual"};
  for (int i = 0; i < args.ns; ++i) {
    const double s = e.K_prime() * static_cast<double>(i) / (args.ns - 1);
    for (int j = 0; j < args.nt; ++j) {
      const double t = e.K() * static_cast<double>(j) / (args.nt - 1);
      const ellipsoid::geometry::SurfacePoint point =
          ellipsoid::geometry::chart(e, s, t);
      const auto [g1, g2] = ellipsoid::geometry::metric_coefficients(e, s, t);
      const double weight = ellipsoid::geometry::weight_D(e, s, t);
      const auto [mu, nu] = ellipsoid::geometry::algebraic_coords(e, s, t);
      const double on_surface =
          point.x * point.x / (e.a * e.a) + point.y * point.y / (e.b * e.b) +
          point.z * point.z / (e.c * e.c) - 1.0;
      table.rows.push_back({point.s, point.t, point.x, point.y, point.z, g1,
                            g2, weight, mu, nu, std::abs(on_surface)});
    }
  }

  emit(global, "chart",
       {{"a", args.a},
        {"b", args.b},
        {"c", args.c},
        {"ns", static_cast<std::int64_t>(args.ns)},
        {"nt", static_cast<std::int64_t>(args.nt)}},
       table);
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  bool quick = false;
};

int run_verify(const GlobalOptions& global, const VerifyArgs& args) {
  const std::vector<ellipsoid::verification::CheckResult> results =
      ellipsoid::verification::run_acceptance(!args.quick,
                                              resolve_threads(global.threads));

  Table table;
  table.name = "verify";
  table.columns = {"criterion", "name",      "pass",
                   "measured",  "tolerance", "detail"};
  bool all_pass = true;
  for (const ellipsoid::verification::CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    table.rows.push_back({static_cast<std::int64_t>(r.criterion), r.name,
                          static_cast<std::int64_t>(r.pass ? 1 : 0),
                          r.measured, r.tolerance, r.detail});
  }

  emit(global, "verify",
       {{"mode", std::string(args.quick ? "quick" : "full")}}, table);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions global;
  SpectrumArgs spectrum_args;
  EigencurveArgs eigencurve_args;
  PerturbArgs perturb_args;
  ChartArgs chart_args;
  VerifyArgs verify_args;

  CLI::App app{
      "Laplace-Beltrami spectra of triaxial ellipsoids via coupled "
      "one-dimensional eigenvalue problems"};
  app.require_subcommand(1);
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", global.threads,
                 "Worker threads for enumeration (0 = library default; the "
                 "ELLIPSOID_SPECTRA_THREADS environment variable is used "
                 "when this is 0)")
      ->capture_default_str();

  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "Enumerate all surface eigenvalues up to a cutoff");
  spectrum_cmd->add_option("--a", spectrum_args.a, "Major semi-axis")
      ->required();
  spectrum_cmd->add_option("--b", spectrum_args.b, "Middle semi-axis")
      ->required();
  spectrum_cmd->add_option("--c", spectrum_args.c, "Minor semi-axis")
      ->required();
  spectrum_cmd
      ->add_option("--lambda-max", spectrum_args.lambda_max,
                   "Upper cutoff; non-positive emits only the header")
      ->required();
  spectrum_cmd
      ->add_option("--backend", spectrum_args.backend,
                   "galerkin, prufer or both (cross-checked)")
      ->check(CLI::IsMember({"galerkin", "prufer", "both"}))
      ->capture_default_str();

  CLI::App* eigencurve_cmd = app.add_subcommand(
      "eigencurve", "Sample one eigenvalue curve h_n or H_m over lambda");
  eigencurve_cmd->add_option("--a", eigencurve_args.a, "Major semi-axis")
      ->required();
  eigencurve_cmd->add_option("--b", eigencurve_args.b, "Middle semi-axis")
      ->required();
  eigencurve_cmd->add_option("--c", eigencurve_args.c, "Minor semi-axis")
      ->required();
  eigencurve_cmd
      ->add_option("--family", eigencurve_args.family,
                   "lower (h_n) or upper (H_m)")
      ->check(CLI::IsMember({"lower", "upper"}))
      ->capture_default_str();
  eigencurve_cmd
      ->add_option("--index", eigencurve_args.index, "Curve index (>= 0)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eigencurve_cmd
      ->add_option("--kappa", eigencurve_args.parity,
                   "Parity bits kappa1 kappa2 kappa3, e.g. 010")
      ->capture_default_str();
  eigencurve_cmd
      ->add_option("--lambda", eigencurve_args.lambdas,
                   "Spectral parameter values to sample")
      ->required()
      ->expected(-1);
  eigencurve_cmd
      ->add_option("--backend", eigencurve_args.backend,
                   "galerkin, prufer or both (one row each)")
      ->check(CLI::IsMember({"galerkin", "prufer", "both"}))
      ->capture_default_str();

  CLI::App* perturb_cmd = app.add_subcommand(
      "perturb",
      "First-order eigenvalue response on the near-sphere family");
  perturb_cmd
      ->add_option("--k2", perturb_args.k2,
                   "Squared separation modulus of the family")
      ->required();
  perturb_cmd->add_option("--m", perturb_args.m, "Upper curve index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  perturb_cmd->add_option("--n", perturb_args.n, "Lower curve index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  perturb_cmd
      ->add_option("--kappa", perturb_args.parity, "Parity bits, e.g. 000")
      ->capture_default_str();
  perturb_cmd
      ->add_option("--step", perturb_args.step,
                   "Central finite-difference step in eps")
      ->capture_default_str();

  CLI::App* chart_cmd = app.add_subcommand(
      "chart", "Tabulate the coordinate chart and metric on a grid");
  chart_cmd->add_option("--a", chart_args.a, "Major semi-axis")->required();
  chart_cmd->add_option("--b", chart_args.b, "Middle semi-axis")->required();
  chart_cmd->add_option("--c", chart_args.c, "Minor semi-axis")->required();
  chart_cmd->add_option("--ns", chart_args.ns, "Grid points along s")
      ->capture_default_str();
  chart_cmd->add_option("--nt", chart_args.nt, "Grid points along t")
      ->capture_default_str();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the built-in verification suite");
  verify_cmd->add_flag("--quick", verify_args.quick,
                       "Run only the fast subset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(global, spectrum_args);
    if (eigencurve_cmd->parsed()) {
      return run_eigencurve(global, eigencurve_args);
    }
    if (perturb_cmd->parsed()) return run_perturb(global, perturb_args);
    if (chart_cmd->parsed()) return run_chart(global, chart_args);
    if (verify_cmd->parsed()) return run_verify(global, verify_args);
  } catch (const InvalidArgument& e) {
    report_error(global, "invalid_argument", e.what());
    return 2;
  } catch (const NumericalError& e) {
    report_error(global, "numerical", e.what());
    return 3;
  } catch (const std::exception& e) {
    report_error(global, "internal", e.what());
    return 3;
  }
  return 2;
}
