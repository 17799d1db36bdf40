// Copyright 2026 The hamlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: learn, risk, scaling, validate, fit.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hamlearn/config.hpp"
#include "hamlearn/decay_fit.hpp"
#include "hamlearn/errors.hpp"
#include "hamlearn/results_io.hpp"
#include "hamlearn/risk.hpp"
#include "hamlearn/trial.hpp"
#include "hamlearn/validation.hpp"

namespace {

using namespace hamlearn;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::optional<int> trials;
  std::optional<int> threads;
};

void add_common(CLI::App* app, CommonOptions& o, bool needs_config) {
  auto* config = app->add_option("--config", o.config_path, "Run configuration file");
  if (needs_config) config->required()->check(CLI::ExistingFile);
  app->add_option("--seed", o.seed, "Master seed");
  app->add_option("--out", o.out_dir, "Output directory");
  app->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  app->add_option("--threads", o.threads, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot read {}", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig load_config(const CommonOptions& o) {
  RunConfig config = o.config_path.empty() ? RunConfig{} : parse_config(read_file(o.config_path));
  if (o.seed) config.seed = *o.seed;
  if (o.trials) config.trials = *o.trials;
  if (o.threads) config.threads = *o.threads;
  config.validate();
  return config;
}

std::ofstream open_in(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name);
  if (!out) throw Error(fmt::format("cannot write {}/{}", dir, name));
  return out;
}

int run_learn(const CommonOptions& o) {
  const RunConfig config = load_config(o);
  const EnsembleResult result = run_ensemble(config);
  const std::string dir = o.out_dir.empty() ? "out" : o.out_dir;
  write_run(dir, result, config, "learn");
  const auto& last = result.summary.back();
  fmt::print("trials {}  experiments {}  median loss {} -> {}\n", result.trials.size(), config.experiments,
             format_number(result.summary.front().p50), format_number(last.p50));
  if (result.median_fit)
    fmt::print("median fit: A {}  gamma {}  r2 {}\n", format_number(result.median_fit->amplitude),
               format_number(result.median_fit->gamma), format_number(result.median_fit->r2));
  fmt::print("wrote {}\n", dir);
  return 0;
}

struct RiskOptions {
  double mu = 0.5;
  double sigma = 0.1;
  std::vector<double> alphas{0.0};
  std::string strategy = "mu_plus_sigma";
  double x_inv = 0.0;
  double t_min_factor = 0.05;
  double t_max_factor = 8.0;
  int points = 100;
  int draws = 1000;
};

InversionStrategy parse_strategy(const std::string& s) {
  if (s == "none") return InversionStrategy::None;
  if (s == "fixed") return InversionStrategy::Fixed;
  if (s == "mu_plus_sigma") return InversionStrategy::MuPlusSigma;
  if (s == "mu_minus_sigma") return InversionStrategy::MuMinusSigma;
  if (s == "pgh") return InversionStrategy::PghSampled;
  throw InvalidArgument(fmt::format("unknown inversion strategy '{}'", s));
}

int run_risk(const CommonOptions& o, const RiskOptions& r) {
  const GaussianPrior1D prior{r.mu, r.sigma};
  prior.validate();
  if (r.points < 2) throw InvalidArgument("--points must be at least 2");
  InversionRule rule{parse_strategy(r.strategy), r.x_inv, r.draws};
  const double t_opt = optimal_time(r.sigma);
  std::vector<double> grid(r.points);
  for (int k = 0; k < r.points; ++k)
    grid[k] = t_opt * (r.t_min_factor + (r.t_max_factor - r.t_min_factor) * k / (r.points - 1));
  RandomStream rng(o.seed.value_or(1));
  std::vector<RiskPoint> points;
  for (double alpha : r.alphas) {
    auto scan = risk_scan(prior, rule, grid, alpha, rng);
    points.insert(points.end(), scan.begin(), scan.end());
  }
  if (o.out_dir.empty()) {
    write_risk(std::cout, points);
  } else {
    auto out = open_in(o.out_dir, "risk.csv");
    write_risk(out, points);
    fmt::print("wrote {}/risk.csv\n", o.out_dir);
  }
  return 0;
}

int run_scaling(const CommonOptions& o, const std::vector<int>& qubits, const std::string& family) {
  const RunConfig config = load_config(o);
  std::function<InteractionGraph(int)> make_graph;
  if (family == "complete")
    make_graph = [](int n) { return InteractionGraph::complete(n); };
  else if (family == "line")
    make_graph = [](int n) { return InteractionGraph::line(n); };
  else
    throw InvalidArgument(fmt::format("unknown graph family '{}'", family));
  const auto rows = scaling_study(config, qubits, make_graph);
  std::ostringstream csv;
  csv << "qubits,dimension,median_gamma,trials_fitted\n";
  for (const auto& row : rows)
    fmt::print(csv, "{},{},{},{}\n", row.qubits, row.dimension, format_number(row.median_gamma), row.gammas.size());
  if (o.out_dir.empty()) {
    std::cout << csv.str();
  } else {
    auto out = open_in(o.out_dir, "scaling.csv");
    out << csv.str();
    fmt::print("{}wrote {}/scaling.csv\n", csv.str(), o.out_dir);
  }
  return 0;
}

int run_validate(const CommonOptions& o, int instances) {
  RandomStream rng(o.seed.value_or(1));
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& graph : {InteractionGraph::complete(n), InteractionGraph::line(n)}) {
      const auto cmp = compare_with_dense_oracle(graph, instances, 100.0, rng);
      const bool pass = cmp.max_abs_error <= 1e-9;
      ok = ok && pass;
      fmt::print("{} {:<12} instances {}  max |fast - dense| {:.3e}\n", pass ? "PASS" : "FAIL", graph.to_string(),
                 cmp.instances, cmp.max_abs_error);
    }
  }
  const double gap = compare_posterior_mean_forms(instances, rng);
  const bool pass = gap <= 1e-6;
  ok = ok && pass;
  fmt::print("{} posterior mean closed form vs quadrature  max gap/sigma {:.3e}\n", pass ? "PASS" : "FAIL", gap);
  return ok ? 0 : 1;
}

int run_fit(const CommonOptions& o, const std::string& input, double drop, bool two_segment) {
  std::ifstream in(input);
  if (!in) throw Error(fmt::format("cannot read {}", input));
  const auto rows = read_summary(in);
  std::vector<LossPoint> series;
  for (const auto& r : rows) series.push_back({static_cast<double>(r.experiment_index), r.p50});
  std::ostringstream csv;
  if (two_segment) {
    const auto fit = fit_two_segment(series, drop);
    csv << "segment,A,gamma,r2,break_index,break_loss,piecewise_r2,single_r2\n";
    for (const auto* part : {&fit.before, &fit.after})
      fmt::print(csv, "{},{},{},{},{},{},{},{}\n", part == &fit.before ? "before" : "after",
                 format_number(part->amplitude), format_number(part->gamma), format_number(part->r2),
                 format_number(fit.break_index), format_number(fit.break_loss), format_number(fit.r2),
                 format_number(fit.single_r2));
  } else {
    const auto fit = fit_decay(series, drop);
    csv << "A,gamma,r2\n";
    fmt::print(csv, "{},{},{}\n", format_number(fit.amplitude), format_number(fit.gamma), format_number(fit.r2));
  }
  if (o.out_dir.empty()) {
    std::cout << csv.str();
  } else {
    auto out = open_in(o.out_dir, "fit.csv");
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian learning with sequential Monte Carlo"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* learn = app.add_subcommand("learn", "Run an ensemble of learning trials");
  add_common(learn, common, true);

  auto* risk = app.add_subcommand("risk", "Single-parameter Bayes risk scan");
  add_common(risk, common, false);
  RiskOptions risk_opts;
  risk->add_option("--mu", risk_opts.mu, "Prior mean");
  risk->add_option("--sigma", risk_opts.sigma, "Prior standard deviation");
  risk->add_option("--alpha", risk_opts.alphas, "Bit-flip rates (repeatable)");
  risk->add_option("--strategy", risk_opts.strategy, "none | fixed | mu_plus_sigma | mu_minus_sigma | pgh");
  risk->add_option("--x-inv", risk_opts.x_inv, "Inversion parameter for the fixed strategy");
  risk->add_option("--t-min", risk_opts.t_min_factor, "Smallest time as a multiple of 1/(2 sigma)");
  risk->add_option("--t-max", risk_opts.t_max_factor, "Largest time as a multiple of 1/(2 sigma)");
  risk->add_option("--points", risk_opts.points, "Grid points");
  risk->add_option("--draws", risk_opts.draws, "Inversion draws per point for the pgh strategy");

  auto* scaling = app.add_subcommand("scaling", "Decay exponent against parameter count");
  add_common(scaling, common, true);
  std::vector<int> qubits{3, 4, 5};
  std::string family = "complete";
  scaling->add_option("--qubits", qubits, "Qubit counts");
  scaling->add_option("--graph-family", family, "complete | line");

  auto* validate = app.add_subcommand("validate", "Cross-check fast paths against oracles");
  add_common(validate, common, false);
  int instances = 100;
  validate->add_option("--instances", instances, "Random instances per graph")->check(CLI::PositiveNumber);

  auto* fit = app.add_subcommand("fit", "Refit an existing summary.csv");
  add_common(fit, common, false);
  std::string input;
  double drop = kDefaultDropFraction;
  bool two_segment = false;
  fit->add_option("input", input, "summary.csv to refit")->required()->check(CLI::ExistingFile);
  fit->add_option("--drop", drop, "Leading fraction dropped as transient");
  fit->add_flag("--two-segment", two_segment, "Fit two log-linear regimes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (learn->parsed()) return run_learn(common);
    if (risk->parsed()) return run_risk(common, risk_opts);
    if (scaling->parsed()) return run_scaling(common, qubits, family);
    if (validate->parsed()) return run_validate(common, instances);
    if (fit->parsed()) return run_fit(common, input, drop, two_segment);
  } catch (const SchemaError& e) {
    fmt::print(std::cerr, "config error (line {}, field {}): {}\n", e.line(), e.field(), e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
