// qpurify: command-line front end for the purification / phase-space library.
//
//   qpurify <command> --in <file>... [--theta r] [--phi r] [--phases r,r,...]
//           [--lambda r] [--mu r] [--grid min,max,n] [--out dir]
//           [--manifest file] [--strict]
//
// Commands: purity, superpose, purify, wigner, tomogram, entangle.
// Exit codes: 0 success, 1 validation error, 2 numeric failure (diagnostics
// land in results.json).

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpurify/density.hpp"
#include "qpurify/entangle.hpp"
#include "qpurify/io.hpp"
#include "qpurify/kernels.hpp"
#include "qpurify/phasespace.hpp"
#include "qpurify/superpose.hpp"
#include "qpurify/tomography.hpp"

namespace {

using qpurify::io::json;
namespace qp = qpurify;

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<std::string> phases;
  std::optional<double> lambda;
  std::optional<double> mu;
  std::optional<std::string> grid;
  std::optional<std::string> out_dir;
  std::optional<std::string> manifest;
  bool strict = false;
};

std::vector<double> parse_reals(const std::string &csv, const char *what) {
  std::vector<double> out;
  if (csv.empty())
    return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(item[used]))
        ++used;
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception &) {
      throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                                std::string(what) + " entry \"" + item +
                                    "\" is not a number");
    }
  }
  return out;
}

qp::Grid1D parse_grid(const std::string &csv) {
  const auto parts = parse_reals(csv, "--grid");
  if (parts.size() != 3)
    throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                              "--grid needs min,max,n");
  const double n = parts[2];
  if (n != std::floor(n))
    throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                              "--grid point count must be an integer");
  return qp::Grid1D(parts[0], parts[1], static_cast<int>(n));
}

// Manifest fields fill in whatever the flags left unset.
void merge_manifest(Options &opts) {
  const json m = qp::io::load_json(*opts.manifest);
  if (m.contains("command")) {
    const std::string cmd = m.at("command").get<std::string>();
    if (cmd != opts.command)
      throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                                "manifest command \"" + cmd +
                                    "\" does not match subcommand \"" +
                                    opts.command + "\"");
  }
  if (opts.inputs.empty() && m.contains("inputs"))
    for (const auto &f : m.at("inputs"))
      opts.inputs.push_back(f.get<std::string>());
  if (!opts.out_dir && m.contains("outputs"))
    opts.out_dir = m.at("outputs").get<std::string>();

  if (!m.contains("params"))
    return;
  const json &p = m.at("params");
  auto take_real = [&](const char *key, std::optional<double> &slot) {
    if (!slot && p.contains(key))
      slot = p.at(key).get<double>();
  };
  take_real("theta", opts.theta);
  take_real("phi", opts.phi);
  take_real("lambda", opts.lambda);
  take_real("mu", opts.mu);
  if (!opts.phases && p.contains("phases")) {
    std::string csv;
    for (const auto &v : p.at("phases"))
      csv += (csv.empty() ? "" : ",") + qp::io::format_real(v.get<double>());
    opts.phases = csv;
  }
  if (!opts.grid && p.contains("grid")) {
    const auto &g = p.at("grid");
    std::string csv;
    for (const auto &v : g)
      csv += (csv.empty() ? "" : ",") +
             (v.is_number_integer()
                  ? std::to_string(v.get<long long>())
                  : qp::io::format_real(v.get<double>()));
    opts.grid = csv;
  }
  if (p.contains("strict") && p.at("strict").get<bool>())
    opts.strict = true;
}

// One pass/fail row of the results "checks" block. measured is always a
// violation magnitude, so pass means measured <= tolerance.
void add_check(json &checks, const std::string &name, double measured,
               double tolerance) {
  json row;
  row["name"] = name;
  row["measured"] = measured;
  row["tolerance"] = tolerance;
  row["pass"] = measured <= tolerance;
  checks.push_back(row);
}

json spectrum_to_json(const qp::RealVec &v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i)
    arr.push_back(v(i));
  return arr;
}

// Inputs of superpose/entangle may be state vectors or density matrices.
qp::DensityMatrix load_density_like(const std::string &path) {
  const json j = qp::io::load_json(path);
  if (qp::io::looks_like_wavefunction(j))
    throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                              path + " holds a wavefunction, expected a "
                                     "density matrix or state vector");
  if (qp::io::looks_like_vector(j))
    return qp::from_state(qp::StateVector(qp::io::vector_from_json(j)));
  return qp::io::density_from_json(j);
}

qp::WaveFunction load_wavefunction(const std::string &path) {
  const json j = qp::io::load_json(path);
  if (!qp::io::looks_like_wavefunction(j))
    throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                              path + " does not hold a wavefunction "
                                     "({xmin,xmax,n,re,im})");
  return qp::io::wavefunction_from_json(j);
}

void require_inputs(const Options &opts, std::size_t lo, std::size_t hi) {
  if (opts.inputs.size() < lo || opts.inputs.size() > hi) {
    const std::string want =
        (lo == hi) ? std::to_string(lo)
                   : std::to_string(lo) + " to " + std::to_string(hi);
    throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                              opts.command + " takes " + want +
                                  " --in file(s), got " +
                                  std::to_string(opts.inputs.size()));
  }
}

qp::PhaseVector phases_from(const Options &opts) {
  return qp::PhaseVector(
      parse_reals(opts.phases.value_or(""), "--phases"));
}

qp::SuperposeParams params_from(const Options &opts) {
  return qp::SuperposeParams(opts.theta.value_or(0.0),
                             opts.phi.value_or(0.0));
}

void run_purity(const Options &opts, json &results, json &checks) {
  require_inputs(opts, 1, 1);
  const qp::DensityMatrix rho = load_density_like(opts.inputs[0]);
  const qp::Spectrum spec = qp::spectral(rho);
  const double p = qp::purity(rho);

  results["purity"] = p;
  results["dim"] = rho.dim();
  results["eigenvalues"] = spectrum_to_json(spec.eigenvalues);

  add_check(checks, "hermiticity_violation",
            (rho.entries() - rho.entries().adjoint()).cwiseAbs().maxCoeff(),
            1e-12);
  add_check(checks, "trace_violation",
            std::abs(rho.entries().trace().real() - 1.0), 1e-12);
  add_check(checks, "positivity_violation",
            std::max(0.0, -spec.eigenvalues.minCoeff()), 1e-10);
  add_check(checks, "purity_range_violation",
            std::max({0.0, p - 1.0, 1.0 / rho.dim() - p}), 1e-9);
}

void run_superpose(const Options &opts, json &results, json &checks,
                   const std::string &out_dir) {
  require_inputs(opts, 2, 2);
  if (!opts.theta)
    throw qp::ValidationError(qp::ErrorCode::InvalidParams,
                              "superpose needs --theta");
  const qp::DensityMatrix rho1 = load_density_like(opts.inputs[0]);
  const qp::DensityMatrix rho2 = load_density_like(opts.inputs[1]);
  const qp::SuperposeParams params = params_from(opts);

  const qp::DensityMatrix sum = qp::phi_add(rho1, rho2, params);

  // Reassemble the interference decomposition to report its residual.
  const qp::StateVector psi1 = qp::principal_state(rho1);
  const qp::StateVector psi2 = qp::principal_state(rho2);
  const qp::cxd ovl = psi1.amplitudes().dot(psi2.amplitudes());
  const qp::cxd phase = std::polar(1.0, params.phi);
  const double norm_sq =
      1.0 + std::sin(2.0 * params.theta) * (phase * ovl).real();
  const qp::Mat assembled =
      (std::cos(params.theta) * std::cos(params.theta) * rho1.entries() +
       std::sin(params.theta) * std::sin(params.theta) * rho2.entries() +
       std::sin(2.0 * params.theta) *
           qp::interference_operator(psi1, psi2, params.phi)) /
      norm_sq;

  const double p = qp::purity(sum);
  results["purity"] = p;
  results["norm_factor_sq"] = 1.0 / norm_sq;
  results["overlap_re"] = ovl.real();
  results["overlap_im"] = ovl.imag();

  qp::io::save_json(out_dir + "/density.json", qp::io::density_to_json(sum));
  results["artifacts"] = json::array({"density.json"});

  const qp::Mat sq = sum.entries() * sum.entries();
  add_check(checks, "purity_violation", (sq - sum.entries()).norm(), 1e-10);
  add_check(checks, "decomposition_residual",
            (assembled - sum.entries()).norm(), 1e-12);
}

void run_purify(const Options &opts, json &results, json &checks,
                const std::string &out_dir) {
  require_inputs(opts, 1, 1);
  const qp::DensityMatrix rho = load_density_like(opts.inputs[0]);
  const qp::PhaseVector phases = phases_from(opts);

  const qp::DensityMatrix pure = qp::purify_mixture(rho, phases);
  const double p = qp::purity(pure);

  results["purity"] = p;
  if (pure.dim() >= 2) {
    results["offdiag_01_re"] = pure.entries()(0, 1).real();
    results["offdiag_01_im"] = pure.entries()(0, 1).imag();
  }

  // Dephasing in the input eigenbasis must recover the input spectrum.
  const qp::Spectrum spec = qp::spectral(rho);
  const qp::Mat in_basis = spec.eigenvectors.adjoint() * pure.entries() *
                           spec.eigenvectors;
  const qp::Mat dephased =
      in_basis.diagonal().real().cast<qp::cxd>().asDiagonal();
  const double dephasing_residual =
      (dephased - qp::Mat(spec.eigenvalues.cast<qp::cxd>().asDiagonal()))
          .norm();
  results["eigenvalues"] = spectrum_to_json(spec.eigenvalues);

  qp::io::save_json(out_dir + "/density.json", qp::io::density_to_json(pure));
  results["artifacts"] = json::array({"density.json"});

  const qp::Mat sq = pure.entries() * pure.entries();
  add_check(checks, "purity_violation", (sq - pure.entries()).norm(), 1e-10);
  add_check(checks, "dephasing_residual", dephasing_residual, 1e-10);
}

void run_wigner(const Options &opts, json &results, json &checks,
                const std::string &out_dir) {
  require_inputs(opts, 1, 2);
  const qp::Grid1D grid =
      opts.grid ? parse_grid(*opts.grid) : qp::Grid1D(-8.0, 8.0, 256);

  qp::WignerGrid total{grid, grid, qp::RealMat()};
  const qp::WaveFunction psi1 = load_wavefunction(opts.inputs[0]);

  if (opts.inputs.size() == 2) {
    if (!opts.theta)
      throw qp::ValidationError(qp::ErrorCode::InvalidParams,
                                "two-state wigner needs --theta");
    const qp::WaveFunction psi2 = load_wavefunction(opts.inputs[1]);
    const qp::WignerSuperposition sup = qp::wigner_superposition(
        psi1, psi2, params_from(opts), grid, grid, opts.strict);
    total = sup.total;

    qp::RealMat assembled(grid.n, grid.n);
    const double c = std::cos(params_from(opts).theta);
    const double s = std::sin(params_from(opts).theta);
    qp::kernels::weighted_sum3(
        sup.norm_factor_sq * c * c, sup.w1.values.data(),
        sup.norm_factor_sq * s * s, sup.w2.values.data(),
        sup.norm_factor_sq * 2.0 * c * s, sup.interference.data(),
        assembled.data(), static_cast<std::size_t>(assembled.size()));
    results["norm_factor_sq"] = sup.norm_factor_sq;
    add_check(checks, "superposition_residual",
              (assembled - total.values).cwiseAbs().maxCoeff(), 1e-8);
  } else {
    total = qp::wigner(psi1, grid, grid, opts.strict);
  }

  const double purity_int = qp::purity_integral(total);
  const double normalization =
      total.values.sum() * grid.spacing() * grid.spacing();
  results["purity_integral"] = purity_int;
  results["normalization"] = normalization;
  results["max_abs_w"] = total.values.cwiseAbs().maxCoeff();

  qp::io::write_wigner_csv(out_dir + "/wigner.csv", total);
  qp::io::save_json(out_dir + "/wigner.meta.json", qp::io::wigner_sidecar(total));
  results["artifacts"] = json::array({"wigner.csv", "wigner.meta.json"});

  add_check(checks, "normalization_violation", std::abs(normalization - 1.0),
            1e-6);
  add_check(checks, "purity_criterion_violation",
            std::abs(purity_int - 1.0 / qp::kTwoPi), 1e-6);
  add_check(checks, "wigner_bound_violation",
            std::max(0.0, total.values.cwiseAbs().maxCoeff() - 1.0 / qp::kPi),
            1e-6);
  const double pmax = std::max(std::abs(grid.min), std::abs(grid.max));
  add_check(checks, "nyquist_violation",
            std::max(0.0, psi1.grid.spacing() - qp::kPi / pmax), 0.0);
  if (opts.inputs.size() == 1 && psi1.grid == grid) {
    const qp::Marginals marg = qp::marginals(total);
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i)
      worst = std::max(worst,
                       std::abs(marg.position(i) - std::norm(psi1.values(i))));
    add_check(checks, "position_marginal_residual", worst, 1e-6);
  }
}

void run_tomogram(const Options &opts, json &results, json &checks,
                  const std::string &out_dir) {
  require_inputs(opts, 1, 2);
  if (!opts.lambda || !opts.mu)
    throw qp::ValidationError(qp::ErrorCode::InvalidParams,
                              "tomogram needs --lambda and --mu");
  const double lambda = *opts.lambda, mu = *opts.mu;
  const qp::Grid1D xgrid = opts.grid
                               ? parse_grid(*opts.grid)
                               : qp::default_tomogram_grid(lambda, mu);

  const qp::WaveFunction psi1 = load_wavefunction(opts.inputs[0]);
  qp::TomogramSlice slice{lambda, mu, xgrid, qp::RealVec()};

  if (opts.inputs.size() == 2) {
    if (!opts.theta)
      throw qp::ValidationError(qp::ErrorCode::InvalidParams,
                                "two-state tomogram needs --theta");
    const qp::WaveFunction psi2 = load_wavefunction(opts.inputs[1]);
    const qp::TomogramSuperposition sup = qp::tomogram_superposition(
        psi1, psi2, params_from(opts), lambda, mu, xgrid);
    slice = sup.total;

    const double c = std::cos(params_from(opts).theta);
    const double s = std::sin(params_from(opts).theta);
    qp::RealVec assembled(xgrid.n);
    qp::kernels::weighted_sum3(
        sup.norm_factor_sq * c * c, sup.phi1.values.data(),
        sup.norm_factor_sq * s * s, sup.phi2.values.data(),
        sup.norm_factor_sq * 2.0 * c * s, sup.interference.data(),
        assembled.data(), static_cast<std::size_t>(xgrid.n));
    results["norm_factor_sq"] = sup.norm_factor_sq;

    const double interference_integral =
        sup.interference.sum() * xgrid.spacing();
    const qp::cxd ovl = qp::overlap(psi1, psi2);
    const qp::cxd phase = std::polar(1.0, params_from(opts).phi);
    results["interference_integral"] = interference_integral;
    add_check(checks, "superposition_residual",
              (assembled - slice.values).cwiseAbs().maxCoeff(), 1e-6);
    add_check(checks, "interference_integral_violation",
              std::abs(interference_integral - (phase * ovl).real()), 1e-6);
  } else {
    slice = qp::tomogram_direct(psi1, lambda, mu, xgrid);

    // Cross-check against the Radon transform of the Wigner grid.
    const qp::WignerGrid w =
        qp::wigner(psi1, psi1.grid, psi1.grid, opts.strict);
    const qp::TomogramSlice radon = qp::tomogram_radon(w, lambda, mu, xgrid);
    add_check(checks, "direct_vs_radon_sup",
              (radon.values - slice.values).cwiseAbs().maxCoeff(), 1e-4);
  }

  const double normalization = slice.values.sum() * xgrid.spacing();
  results["normalization"] = normalization;
  results["min_value"] = slice.values.minCoeff();
  results["max_value"] = slice.values.maxCoeff();

  qp::io::write_tomogram_csv(out_dir + "/tomogram.csv", slice);
  qp::io::save_json(out_dir + "/tomogram.meta.json",
                    qp::io::tomogram_sidecar(slice));
  results["artifacts"] = json::array({"tomogram.csv", "tomogram.meta.json"});

  add_check(checks, "normalization_violation", std::abs(normalization - 1.0),
            1e-6);
  add_check(checks, "nonnegativity_violation",
            std::max(0.0, -slice.values.minCoeff()), 1e-8);
}

void run_entangle(const Options &opts, json &results, json &checks,
                  const std::string &out_dir) {
  require_inputs(opts, 2, 2);
  const qp::DensityMatrix rhoA = load_density_like(opts.inputs[0]);
  const qp::DensityMatrix rhoB = load_density_like(opts.inputs[1]);
  const qp::PhaseVector phases = phases_from(opts);

  const qp::BipartiteDensity joint = qp::phi_multiply(rhoA, rhoB, phases);
  const qp::DensityMatrix trB = qp::partial_trace(joint, qp::Subsystem::A);
  const qp::DensityMatrix trA = qp::partial_trace(joint, qp::Subsystem::B);

  const double p = qp::purity(joint.rho);
  results["purity"] = p;
  results["defect"] = qp::entanglement_defect(joint);

  const qp::SchmidtDecomposition sd =
      qp::schmidt(qp::principal_state(joint.rho), joint.dimA, joint.dimB);
  results["schmidt_coefficients"] = spectrum_to_json(sd.coefficients);

  qp::io::save_json(out_dir + "/bipartite.json",
                    qp::io::bipartite_to_json(joint));
  results["artifacts"] = json::array({"bipartite.json"});

  const qp::Mat sq = joint.rho.entries() * joint.rho.entries();
  add_check(checks, "purity_violation", (sq - joint.rho.entries()).norm(),
            1e-10);
  add_check(checks, "partial_trace_A_residual",
            (trB.entries() - rhoA.entries()).norm(), 1e-10);
  add_check(checks, "partial_trace_B_residual",
            (trA.entries() - rhoB.entries()).norm(), 1e-10);

  const qp::Spectrum sA = qp::spectral(trB);
  const qp::Spectrum sB = qp::spectral(trA);
  double gap = 0.0;
  const int dmax = std::max(joint.dimA, joint.dimB);
  for (int j = 0; j < dmax; ++j) {
    const double la = (j < joint.dimA) ? sA.eigenvalues(j) : 0.0;
    const double lb = (j < joint.dimB) ? sB.eigenvalues(j) : 0.0;
    gap = std::max(gap, std::abs(la - lb));
  }
  add_check(checks, "marginal_spectra_gap", gap, 1e-10);
}

int run(const Options &opts) {
  std::string out_dir = opts.out_dir.value_or(".");
  if (const char *env = std::getenv("QPURIFY_OUT"); env != nullptr && *env)
    out_dir = env;

  json top;
  top["command"] = opts.command;
  top["inputs"] = opts.inputs;
  json params = json::object();
  if (opts.theta)
    params["theta"] = *opts.theta;
  if (opts.phi)
    params["phi"] = *opts.phi;
  if (opts.phases)
    params["phases"] = parse_reals(*opts.phases, "--phases");
  if (opts.lambda)
    params["lambda"] = *opts.lambda;
  if (opts.mu)
    params["mu"] = *opts.mu;
  if (opts.grid)
    params["grid"] = *opts.grid;
  if (opts.strict)
    params["strict"] = true;
  top["params"] = params;

  std::filesystem::create_directories(out_dir);

  json results = json::object();
  json checks = json::array();
  try {
    if (opts.command == "purity")
      run_purity(opts, results, checks);
    else if (opts.command == "superpose")
      run_superpose(opts, results, checks, out_dir);
    else if (opts.command == "purify")
      run_purify(opts, results, checks, out_dir);
    else if (opts.command == "wigner")
      run_wigner(opts, results, checks, out_dir);
    else if (opts.command == "tomogram")
      run_tomogram(opts, results, checks, out_dir);
    else if (opts.command == "entangle")
      run_entangle(opts, results, checks, out_dir);
  } catch (const qp::NumericError &err) {
    top["results"] = results;
    top["checks"] = checks;
    json diag;
    diag["code"] = qp::error_code_name(err.code());
    diag["message"] = err.what();
    top["error"] = diag;
    qp::io::save_json(out_dir + "/results.json", top);
    throw;
  }

  top["results"] = results;
  top["checks"] = checks;
  qp::io::save_json(out_dir + "/results.json", top);

  bool all_pass = true;
  for (const auto &row : checks)
    all_pass = all_pass && row.at("pass").get<bool>();
  std::cout << opts.command << ": wrote " << out_dir
            << "/results.json; checks "
            << (all_pass ? "all pass" : "have FAILURES") << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"density-operator purification and phase-space toolkit"};
  app.require_subcommand(1);

  Options opts;
  for (const char *name :
       {"purity", "superpose", "purify", "wigner", "tomogram", "entangle"}) {
    CLI::App *sub = app.add_subcommand(name);
    sub->add_option("--in", opts.inputs, "input JSON file(s)");
    sub->add_option("--theta", opts.theta, "mixing angle in [0, pi/2]");
    sub->add_option("--phi", opts.phi, "relative phase");
    sub->add_option("--phases", opts.phases,
                    "comma-separated relative phases");
    sub->add_option("--lambda", opts.lambda, "tomogram direction, q weight");
    sub->add_option("--mu", opts.mu, "tomogram direction, p weight");
    sub->add_option("--grid", opts.grid, "grid as min,max,n");
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--manifest", opts.manifest, "JSON manifest file");
    sub->add_flag("--strict", opts.strict,
                  "escalate discretization warnings to errors");
    sub->callback([&opts, name]() { opts.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &err) {
    return app.exit(err);
  }

  try {
    if (opts.manifest)
      merge_manifest(opts);
    if (opts.inputs.empty())
      throw qp::ValidationError(qp::ErrorCode::InvalidInput,
                                "no --in input files given");
    return run(opts);
  } catch (const qp::NumericError &err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const qp::Error &err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
