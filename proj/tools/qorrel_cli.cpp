/*
 * Copyright 2026 The qorrel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qorrel/maxent.hpp"
#include "qorrel/report.hpp"
#include "qorrel/spectra.hpp"
#include "qorrel/states.hpp"
#include "qorrel/threads.hpp"
#include "qorrel/witness.hpp"

/* Command-line front end.
 *
 * Exit codes: 0 success / check passed, 1 a verification or witness check
 * failed, 2 malformed input or parameters, 3 the numerical solver failed.
 * Output is deterministic for fixed inputs when --no-timings is given.
 */

namespace {

using qorrel::report::Json;

constexpr double kPi4 = 0.78539816339744830962;

struct CommonArgs {
  std::string out_path;
  std::string format = "json";
  bool no_timings = false;
};

struct StateArgs {
  std::string family;
  int n = 3;
  int m = 1;
  double theta = kPi4;
  double phi = kPi4;
  double alpha = 0.0;  // 0 means "default" (resolved to atan sqrt 2)
  std::string coeff_file;
  std::uint64_t coeff_seed = 0;
  bool have_coeff_seed = false;
};

double default_alpha() { return std::atan(std::sqrt(2.0)); }

qorrel::Mat3 pure_coeff(const std::string& family, double theta, double phi) {
  Eigen::Vector3cd v;
  if (family == "ghz1")
    v << std::cos(theta), std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi);
  else
    v << std::sin(theta) * std::cos(phi), std::cos(theta), std::sin(theta) * std::sin(phi);
  return v * v.adjoint();
}

qorrel::FamilyParams resolve_params(const StateArgs& args) {
  qorrel::FamilyParams p;
  p.n = args.n;
  p.m = args.m;
  p.theta = args.theta;
  p.phi = args.phi;
  p.alpha = args.alpha > 0.0 ? args.alpha : default_alpha();
  if (args.family == "ms") return p;
  if (!args.coeff_file.empty())
    p.c = qorrel::load_coeff_file(args.coeff_file);
  else if (args.have_coeff_seed)
    p.c = qorrel::random_psd_coeff(args.coeff_seed);
  else
    p.c = pure_coeff(args.family, args.theta, args.phi);
  return p;
}

qorrel::Family family_tag(const std::string& name) {
  if (name == "ghz1") return qorrel::Family::Ghz1;
  if (name == "ghz2") return qorrel::Family::Ghz2;
  if (name == "ms") return qorrel::Family::Ms;
  throw std::invalid_argument("unknown family: " + name);
}

qorrel::DensityMatrix build_state(const StateArgs& args, const qorrel::FamilyParams& p) {
  switch (family_tag(args.family)) {
    case qorrel::Family::Ghz1: return qorrel::ghz1(p);
    case qorrel::Family::Ghz2: return qorrel::ghz2(p);
    case qorrel::Family::Ms: return qorrel::ms_state(p.n, p.alpha);
  }
  throw std::invalid_argument("unknown family");
}

Json complex_json(const qorrel::Cd& z) {
  return Json::array().push(Json::num(z.real())).push(Json::num(z.imag()));
}

Json coeff_json(const qorrel::Mat3& c) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int col = 0; col < 3; ++col) row.push(complex_json(c(r, col)));
    rows.push(std::move(row));
  }
  return rows;
}

Json params_json(const StateArgs& args, const qorrel::FamilyParams& p) {
  Json out = Json::object();
  if (args.family == "ms") {
    out.add("alpha", Json::num(p.alpha));
    return out;
  }
  out.add("theta", Json::num(p.theta));
  out.add("phi", Json::num(p.phi));
  out.add("coeff", coeff_json(p.c));
  if (args.have_coeff_seed)
    out.add("coeff_seed", Json::integer(static_cast<long>(args.coeff_seed)));
  return out;
}

Json levels_json(const qorrel::CorrelationSpectrum& s) {
  Json out = Json::object();
  for (const auto& kv : s.values) out.add(std::to_string(kv.first), Json::num(kv.second));
  return out;
}

Json notes_json(const qorrel::CorrelationSpectrum& s) {
  Json out = Json::array();
  for (const auto& note : s.notes) out.push(Json::str(note));
  return out;
}

void emit(const CommonArgs& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(common.out_path);
  if (!f) throw std::runtime_error("cannot open output file " + common.out_path);
  f << text;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void add_timings(Json& doc, const CommonArgs& common, const Stopwatch& watch) {
  doc.add("version", Json::str(qorrel::version_string()));
  if (!common.no_timings)
    doc.add("timings", Json::object().add("wall_ms", Json::num(watch.ms())));
}

qorrel::CorrelationSpectrum closed_form(const StateArgs& args,
                                        const qorrel::FamilyParams& p) {
  switch (family_tag(args.family)) {
    case qorrel::Family::Ghz1: return qorrel::ghz1_spectrum(p);
    case qorrel::Family::Ghz2: return qorrel::ghz2_spectrum(p);
    case qorrel::Family::Ms: return qorrel::ms_spectrum(p.n, p.alpha);
  }
  throw std::invalid_argument("unknown family");
}

// ---- spectrum ----

void run_spectrum(const CommonArgs& common, const StateArgs& args) {
  Stopwatch watch;
  qorrel::FamilyParams p = resolve_params(args);
  qorrel::CorrelationSpectrum spec = closed_form(args, p);

  if (common.format == "csv") {
    std::string text = qorrel::report::csv_row({"family", "n", "m", "method", "level", "value"});
    for (const auto& kv : spec.values)
      text += qorrel::report::csv_row({args.family, std::to_string(args.n),
                                       std::to_string(args.m), spec.method,
                                       std::to_string(kv.first),
                                       qorrel::report::format_double(kv.second)});
    text += qorrel::report::csv_row({args.family, std::to_string(args.n),
                                     std::to_string(args.m), spec.method, "total",
                                     qorrel::report::format_double(spec.total)});
    emit(common, text);
    return;
  }

  Json doc = Json::object();
  doc.add("family", Json::str(args.family));
  doc.add("n", Json::integer(args.n));
  doc.add("m", Json::integer(args.m));
  doc.add("params", params_json(args, p));
  doc.add("method", Json::str(spec.method));
  doc.add("spectrum", levels_json(spec));
  doc.add("total", Json::num(spec.total));
  doc.add("notes", notes_json(spec));
  add_timings(doc, common, watch);
  emit(common, doc.dump());
}

// ---- verify ----

int run_verify(const CommonArgs& common, const StateArgs& args, double tol,
               const qorrel::SolverConfig& solver) {
  Stopwatch watch;
  qorrel::FamilyParams p = resolve_params(args);
  qorrel::CorrelationSpectrum closed = closed_form(args, p);
  qorrel::DensityMatrix rho = build_state(args, p);
  qorrel::MaxEntSpectrumDetail oracle = qorrel::maxent_spectrum_detail(rho, solver);

  double max_diff = 0.0;
  std::map<int, double> diff;
  for (int k = 2; k <= args.n; ++k) {
    diff[k] = std::abs(closed.level(k) - oracle.spectrum.level(k));
    max_diff = std::max(max_diff, diff[k]);
  }
  const double total_diff = std::abs(closed.total - oracle.spectrum.total);
  const bool pass = max_diff <= tol;

  if (common.format == "csv") {
    std::string text =
        qorrel::report::csv_row({"level", "closed_form", "maxent", "abs_diff"});
    for (int k = 2; k <= args.n; ++k)
      text += qorrel::report::csv_row({std::to_string(k),
                                       qorrel::report::format_double(closed.level(k)),
                                       qorrel::report::format_double(oracle.spectrum.level(k)),
                                       qorrel::report::format_double(diff[k])});
    text += qorrel::report::csv_row({"total", qorrel::report::format_double(closed.total),
                                     qorrel::report::format_double(oracle.spectrum.total),
                                     qorrel::report::format_double(total_diff)});
    emit(common, text);
    return pass ? 0 : 1;
  }

  Json residuals = Json::object();
  Json iterations = Json::object();
  for (const auto& kv : oracle.final_solves) {
    residuals.add(std::to_string(kv.first), Json::num(kv.second.residual));
    iterations.add(std::to_string(kv.first), Json::integer(kv.second.iterations));
  }
  Json diffs = Json::object();
  for (const auto& kv : diff) diffs.add(std::to_string(kv.first), Json::num(kv.second));
  Json epsilons = Json::array();
  for (double e : oracle.epsilons) epsilons.push(Json::num(e));

  Json doc = Json::object();
  doc.add("family", Json::str(args.family));
  doc.add("n", Json::integer(args.n));
  doc.add("m", Json::integer(args.m));
  doc.add("params", params_json(args, p));
  doc.add("tol", Json::num(tol));
  doc.add("closed_form", Json::object()
                             .add("method", Json::str(closed.method))
                             .add("spectrum", levels_json(closed))
                             .add("total", Json::num(closed.total))
                             .add("notes", notes_json(closed)));
  doc.add("maxent", Json::object()
                        .add("method", Json::str(oracle.spectrum.method))
                        .add("spectrum", levels_json(oracle.spectrum))
                        .add("total", Json::num(oracle.spectrum.total))
                        .add("epsilons", std::move(epsilons))
                        .add("residuals", std::move(residuals))
                        .add("iterations", std::move(iterations)));
  doc.add("diff", std::move(diffs));
  doc.add("max_diff", Json::num(max_diff));
  doc.add("total_diff", Json::num(total_diff));
  doc.add("pass", Json::boolean(pass));
  add_timings(doc, common, watch);
  emit(common, doc.dump());
  return pass ? 0 : 1;
}

// ---- limits ----

struct LimitsArgs {
  std::string state = "sigma-g";
  std::vector<double> gammas{5.0, 10.0, 20.0, 30.0};
  double c02 = 0.2;
};

int run_limits(const CommonArgs& common, const StateArgs& args, const LimitsArgs& largs) {
  Stopwatch watch;
  StateArgs sargs = args;
  if (largs.state == "sigma-g") sargs.family = "ghz1";
  else if (largs.state == "sigma-2" || largs.state == "tau-2") sargs.family = "ghz2";
  else if (largs.state == "sigma-s" || largs.state == "ms-exp") sargs.family = "ms";
  else throw std::invalid_argument("unknown interpolating state: " + largs.state);

  qorrel::FamilyParams p = resolve_params(sargs);
  if (largs.state == "tau-2" && sargs.coeff_file.empty()) {
    // Angle-built coefficients for tau-2 start from the dephased diagonal;
    // bolting a coherence onto a pure matrix would break positivity.
    p.c = qorrel::spherical_coeff(sargs.theta, sargs.phi);
    p.c(0, 2) = qorrel::Cd(largs.c02, 0.0);
    p.c(2, 0) = qorrel::Cd(largs.c02, 0.0);
    qorrel::validate_coeff(p.c);
  }

  const int n = p.n;
  qorrel::DensityMatrix reference = build_state(sargs, p);
  qorrel::DensityMatrix companion =
      largs.state == "ms-exp"
          ? reference
          : qorrel::diagonal_companion(p, family_tag(sargs.family), largs.state == "tau-2");

  int marginal_level = 0;
  if (largs.state == "sigma-g" || largs.state == "tau-2") marginal_level = n - 1;
  else if (largs.state == "sigma-2") marginal_level = n - p.m - 1;
  else if (largs.state == "sigma-s") marginal_level = n - 2;
  else marginal_level = n;
  if (marginal_level < 1)
    throw std::invalid_argument("limits: no marginal level to check for these n, m");

  std::vector<double> gammas = largs.gammas;
  if (gammas.empty()) throw std::invalid_argument("limits: empty gamma list");
  std::sort(gammas.begin(), gammas.end());

  auto state_at = [&](double g) -> qorrel::DensityMatrix {
    if (largs.state == "sigma-g") return qorrel::sigma_g(p, g);
    if (largs.state == "sigma-2") return qorrel::sigma_2(p, g);
    if (largs.state == "tau-2") return qorrel::tau_2(p, g);
    if (largs.state == "sigma-s") return qorrel::sigma_s(n, p.alpha, g);
    return qorrel::ms_exp_limit(n, p.alpha, g);
  };

  Json rows = Json::array();
  std::string csv = qorrel::report::csv_row(
      {"gamma", "trace_distance", "marginal_residual", "marginal_level"});
  double prev_dist = -1.0;
  bool monotone = true;
  double final_dist = 0.0, final_resid = 0.0;
  for (double g : gammas) {
    qorrel::DensityMatrix sigma = state_at(g);
    const double dist = qorrel::trace_distance(sigma, companion);
    const double resid =
        qorrel::max_marginal_residual(sigma.data, reference.data, n, marginal_level);
    if (prev_dist >= 0.0 && dist > prev_dist + 1e-12) monotone = false;
    prev_dist = dist;
    final_dist = dist;
    final_resid = resid;
    rows.push(Json::object()
                  .add("gamma", Json::num(g))
                  .add("trace_distance", Json::num(dist))
                  .add("marginal_residual", Json::num(resid)));
    csv += qorrel::report::csv_row({qorrel::report::format_double(g),
                                    qorrel::report::format_double(dist),
                                    qorrel::report::format_double(resid),
                                    std::to_string(marginal_level)});
  }
  const bool pass = monotone;

  if (common.format == "csv") {
    emit(common, csv);
    return pass ? 0 : 1;
  }

  Json doc = Json::object();
  doc.add("state", Json::str(largs.state));
  doc.add("family", Json::str(sargs.family));
  doc.add("n", Json::integer(n));
  doc.add("m", Json::integer(p.m));
  doc.add("params", params_json(sargs, p));
  doc.add("marginal_level", Json::integer(marginal_level));
  doc.add("rows", std::move(rows));
  doc.add("final_trace_distance", Json::num(final_dist));
  doc.add("final_marginal_residual", Json::num(final_resid));
  doc.add("monotone", Json::boolean(monotone));
  doc.add("pass", Json::boolean(pass));
  add_timings(doc, common, watch);
  emit(common, doc.dump());
  return pass ? 0 : 1;
}

// ---- witness ----

int run_witness(const CommonArgs& common, const StateArgs& args, int samples,
                std::uint64_t seed) {
  Stopwatch watch;
  if (common.format == "csv")
    throw std::invalid_argument("witness: csv output is not supported");

  std::string base_family = args.family;
  bool pure = false;
  if (base_family == "ghz1-pure") { base_family = "ghz1"; pure = true; }
  if (base_family == "ghz2-pure") { base_family = "ghz2"; pure = true; }
  if (base_family != "ghz1" && base_family != "ghz2" && base_family != "ms")
    throw std::invalid_argument("witness: family must be ghz1-pure, ghz2-pure or ms");
  if (!pure && base_family != "ms")
    throw std::invalid_argument("witness: GHZ witnesses act on pure states; "
                                "use ghz1-pure or ghz2-pure");

  const int n = args.n;
  const double alpha = args.alpha > 0.0 ? args.alpha : default_alpha();

  qorrel::Vec psi;
  if (base_family == "ghz1") {
    qorrel::DensityMatrix rho = qorrel::ghz1_pure(n, args.theta, args.phi);
    qorrel::Spectrum sp = qorrel::eigh(rho.data);
    psi = sp.v.col(0);
  } else if (base_family == "ghz2") {
    qorrel::DensityMatrix rho = qorrel::ghz2_pure(n, args.m, args.theta, args.phi);
    qorrel::Spectrum sp = qorrel::eigh(rho.data);
    psi = sp.v.col(0);
  } else {
    auto kets = qorrel::ms_basis_kets(n, alpha);
    psi = (kets[0] + kets[1] + kets[2]) / std::sqrt(3.0);
  }

  const auto splits = qorrel::find_basis_splits(psi, n);

  Json doc = Json::object();
  doc.add("family", Json::str(args.family));
  doc.add("n", Json::integer(n));
  doc.add("m", Json::integer(args.m));
  Json params = Json::object();
  if (base_family == "ms") params.add("alpha", Json::num(alpha));
  else {
    params.add("theta", Json::num(args.theta));
    params.add("phi", Json::num(args.phi));
  }
  doc.add("params", std::move(params));
  doc.add("samples", Json::integer(samples));
  doc.add("seed", Json::integer(static_cast<long>(seed)));
  doc.add("splits_found", Json::integer(static_cast<long>(splits.size())));

  bool pass = false;
  if (base_family == "ms") {
    // No product split may exist, and the local generator must pin the state.
    qorrel::UemeCertificate cert =
        qorrel::ueme_check(psi, qorrel::ms_generator(n, alpha).combined());
    doc.add("certificate", Json::object()
                               .add("max_support", Json::integer(cert.max_support))
                               .add("gap", Json::num(cert.gap))
                               .add("fidelity", Json::num(cert.fidelity))
                               .add("local", Json::boolean(cert.local))
                               .add("valid", Json::boolean(cert.valid)));
    pass = splits.empty() && cert.valid;
    doc.add("expected", Json::str("no split, valid local certificate"));
  } else {
    // A split must exist and flipping it must be invisible to every
    // (n-1)-local observable, sampled and exact.
    qorrel::ProjectorPair split = qorrel::natural_split(family_tag(base_family), n);
    qorrel::Vec flipped = qorrel::flip_state(psi, split);
    const double deviation =
        qorrel::witness_expectation_deviation(psi, flipped, n, samples, seed);

    qorrel::OperatorSum support_sum = qorrel::marginal_support_sum(psi, n, n - 1);
    qorrel::Spectrum sp = qorrel::eigh(support_sum.total);
    const double top_gap = sp.w(0) - sp.w(1);
    const double flip_energy =
        (flipped.adjoint() * support_sum.total * flipped)(0, 0).real();
    const double degeneracy_defect = sp.w(0) - flip_energy;

    doc.add("deviation", Json::num(deviation));
    doc.add("degenerate_top",
            Json::object()
                .add("top_eigenvalue", Json::num(sp.w(0)))
                .add("gap_below_top", Json::num(top_gap))
                .add("flipped_expectation", Json::num(flip_energy))
                .add("degeneracy_defect", Json::num(degeneracy_defect)));
    pass = !splits.empty() && deviation <= 1e-10 && degeneracy_defect <= 1e-8;
    doc.add("expected", Json::str("split exists, flip invisible at one site less"));
  }
  doc.add("pass", Json::boolean(pass));
  add_timings(doc, common, watch);
  emit(common, doc.dump());
  return pass ? 0 : 1;
}

// ---- oracle-dump ----

int run_oracle_dump(const CommonArgs& common, const StateArgs& args,
                    const qorrel::SolverConfig& solver) {
  Stopwatch watch;
  if (common.format == "csv")
    throw std::invalid_argument("oracle-dump: csv output is not supported");
  qorrel::FamilyParams p = resolve_params(args);
  qorrel::DensityMatrix rho = build_state(args, p);
  qorrel::MaxEntSpectrumDetail detail = qorrel::maxent_spectrum_detail(rho, solver);

  Json per_eps = Json::array();
  for (std::size_t i = 0; i < detail.per_epsilon.size(); ++i) {
    per_eps.push(Json::object()
                     .add("epsilon", Json::num(detail.epsilons[i]))
                     .add("spectrum", levels_json(detail.per_epsilon[i]))
                     .add("telescoped_total", Json::num(detail.per_epsilon[i].total))
                     .add("marginal_total", Json::num(detail.per_epsilon_total[i])));
  }
  Json residuals = Json::object();
  Json iterations = Json::object();
  Json f_final = Json::object();
  for (const auto& kv : detail.final_solves) {
    residuals.add(std::to_string(kv.first), Json::num(kv.second.residual));
    iterations.add(std::to_string(kv.first), Json::integer(kv.second.iterations));
    f_final.add(std::to_string(kv.first),
                Json::num(kv.second.f_trace.empty() ? 0.0 : kv.second.f_trace.back()));
  }

  Json doc = Json::object();
  doc.add("family", Json::str(args.family));
  doc.add("n", Json::integer(args.n));
  doc.add("m", Json::integer(args.m));
  doc.add("params", params_json(args, p));
  doc.add("method", Json::str("maxent"));
  doc.add("per_epsilon", std::move(per_eps));
  doc.add("spectrum", levels_json(detail.spectrum));
  doc.add("total", Json::num(detail.spectrum.total));
  doc.add("residuals", std::move(residuals));
  doc.add("iterations", std::move(iterations));
  doc.add("dual_objective", std::move(f_final));
  add_timings(doc, common, watch);
  emit(common, doc.dump());
  return 0;
}

void add_state_options(CLI::App* cmd, StateArgs& args, bool witness_families) {
  if (witness_families)
    cmd->add_option("--family", args.family, "ghz1-pure, ghz2-pure or ms")->required();
  else
    cmd->add_option("--family", args.family, "ghz1, ghz2 or ms")->required();
  cmd->add_option("--n", args.n, "number of qutrits")->required()->check(CLI::Range(2, 8));
  cmd->add_option("--m", args.m, "split position (ghz2)");
  cmd->add_option("--theta", args.theta, "polar angle (default pi/4)");
  cmd->add_option("--phi", args.phi, "azimuthal angle (default pi/4)");
  cmd->add_option("--alpha", args.alpha, "slice mixing angle (default atan sqrt 2)");
  if (!witness_families) {
    cmd->add_option("--coeff", args.coeff_file, "JSON file with a 3x3 coefficient matrix");
    cmd->add_option("--coeff-seed", args.coeff_seed,
                    "seeded random full-rank coefficient matrix")
        ->each([&args](const std::string&) { args.have_coeff_seed = true; });
  }
}

void add_common_options(CLI::App* cmd, CommonArgs& common) {
  cmd->add_option("--out", common.out_path, "output file (default stdout)");
  cmd->add_option("--format", common.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--no-timings", common.no_timings,
                "omit wall-clock timings for byte-stable output");
}

void add_solver_options(CLI::App* cmd, qorrel::SolverConfig& solver) {
  cmd->add_option("--grad-tol", solver.grad_tol, "constraint residual tolerance");
  cmd->add_option("--max-iters", solver.max_iters, "iteration cap per solve");
  cmd->add_option("--epsilons", solver.epsilon_schedule,
                  "mixing schedule toward the identity (largest first)");
}

}  // namespace

int main(int argc, char** argv) {
  qorrel::apply_thread_cap();

  CLI::App app{"irreducible multiparty correlation toolkit for qutrit states"};
  app.set_version_flag("--version", qorrel::version_string());
  app.require_subcommand(1);

  int exit_code = 0;

  CommonArgs spectrum_common;
  StateArgs spectrum_args;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "closed-form correlation levels for a state family");
  add_state_options(spectrum, spectrum_args, false);
  add_common_options(spectrum, spectrum_common);
  spectrum->callback([&] { run_spectrum(spectrum_common, spectrum_args); });

  CommonArgs verify_common;
  StateArgs verify_args;
  qorrel::SolverConfig verify_solver;
  double verify_tol = 1e-2;
  CLI::App* verify = app.add_subcommand(
      "verify", "closed form against the numerical maximum-entropy solver");
  add_state_options(verify, verify_args, false);
  add_common_options(verify, verify_common);
  add_solver_options(verify, verify_solver);
  verify->add_option("--tol", verify_tol, "per-level agreement tolerance");
  verify->callback(
      [&] { exit_code = run_verify(verify_common, verify_args, verify_tol, verify_solver); });

  CommonArgs limits_common;
  StateArgs limits_args;
  LimitsArgs limits_extra;
  CLI::App* limits = app.add_subcommand(
      "limits", "interpolating states against their diverging-coupling limits");
  limits->add_option("--state", limits_extra.state,
                     "sigma-g, sigma-2, tau-2, sigma-s or ms-exp")
      ->required();
  limits->add_option("--n", limits_args.n, "number of qutrits")
      ->required()
      ->check(CLI::Range(2, 8));
  limits->add_option("--m", limits_args.m, "split position (sigma-2, tau-2)");
  limits->add_option("--theta", limits_args.theta, "polar angle (default pi/4)");
  limits->add_option("--phi", limits_args.phi, "azimuthal angle (default pi/4)");
  limits->add_option("--alpha", limits_args.alpha,
                     "slice mixing angle (default atan sqrt 2)");
  limits->add_option("--coeff", limits_args.coeff_file,
                     "JSON file with a 3x3 coefficient matrix");
  limits->add_option("--c02", limits_extra.c02,
                     "0-2 coherence added to the angle-built coefficients (tau-2)");
  limits->add_option("--gammas", limits_extra.gammas, "coupling strengths to sweep");
  add_common_options(limits, limits_common);
  limits->callback(
      [&] { exit_code = run_limits(limits_common, limits_args, limits_extra); });

  CommonArgs witness_common;
  StateArgs witness_args;
  int witness_samples = 100;
  std::uint64_t witness_seed = 1;
  CLI::App* witness = app.add_subcommand(
      "witness", "marginal-flip witness or local pinning certificate");
  add_state_options(witness, witness_args, true);
  add_common_options(witness, witness_common);
  witness->add_option("--samples", witness_samples, "random observable draws")
      ->check(CLI::PositiveNumber);
  witness->add_option("--seed", witness_seed, "base seed for the draws");
  witness->callback([&] {
    exit_code = run_witness(witness_common, witness_args, witness_samples, witness_seed);
  });

  CommonArgs oracle_common;
  StateArgs oracle_args;
  qorrel::SolverConfig oracle_solver;
  CLI::App* oracle = app.add_subcommand(
      "oracle-dump", "full maximum-entropy reconstruction diagnostics");
  add_state_options(oracle, oracle_args, false);
  add_common_options(oracle, oracle_common);
  add_solver_options(oracle, oracle_solver);
  oracle->callback(
      [&] { exit_code = run_oracle_dump(oracle_common, oracle_args, oracle_solver); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
