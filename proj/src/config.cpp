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

#include "hamlearn/config.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "hamlearn/errors.hpp"
#include "hamlearn/ising_model.hpp"
#include "hamlearn/single_param_model.hpp"

namespace hamlearn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view s) {
  // from_chars for double is incomplete in some toolchains; strtod is exact enough.
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) throw InvalidArgument(fmt::format("'{}' is not a number", s));
  return v;
}

template <typename Int>
Int to_int(std::string_view s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument(fmt::format("'{}' is not an integer", s));
  return v;
}

std::vector<double> to_doubles(std::string_view s) {
  std::vector<double> out;
  while (!trim(s).empty()) {
    const auto comma = s.find(',');
    out.push_back(to_double(trim(s.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view to_string(ModelKind m) { return m == ModelKind::Ising ? "ising" : "single_param"; }
std::string_view to_string(PriorKind p) { return p == PriorKind::Uniform ? "uniform" : "near_degenerate"; }
std::string_view to_string(TruthMode t) { return t == TruthMode::Random ? "random" : "fixed"; }

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"model", [](RunConfig& c, std::string_view v) {
         if (v == "ising") c.model = ModelKind::Ising;
         else if (v == "single_param") c.model = ModelKind::SingleParam;
         else throw InvalidArgument(fmt::format("unknown model '{}' (expected ising or single_param)", v));
       }},
      {"graph", [](RunConfig& c, std::string_view v) { c.graph = InteractionGraph::parse(v); }},
      {"max_qubits", [](RunConfig& c, std::string_view v) { c.max_qubits = to_int<int>(v); }},
      {"prior", [](RunConfig& c, std::string_view v) {
         if (v == "uniform") c.prior = PriorKind::Uniform;
         else if (v == "near_degenerate") c.prior = PriorKind::NearDegenerate;
         else throw InvalidArgument(fmt::format("unknown prior '{}' (expected uniform or near_degenerate)", v));
       }},
      {"box_lower", [](RunConfig& c, std::string_view v) { c.box_lower = to_double(v); }},
      {"box_upper", [](RunConfig& c, std::string_view v) { c.box_upper = to_double(v); }},
      {"jitter_variance", [](RunConfig& c, std::string_view v) { c.jitter_variance = to_double(v); }},
      {"experiment", [](RunConfig& c, std::string_view v) { c.experiment = parse_experiment_kind(v); }},
      {"measurement", [](RunConfig& c, std::string_view v) { c.measurement = parse_measurement(v); }},
      {"t_max", [](RunConfig& c, std::string_view v) { c.t_max = to_double(v); }},
      {"min_separation", [](RunConfig& c, std::string_view v) { c.min_separation = to_double(v); }},
      {"max_redraws", [](RunConfig& c, std::string_view v) { c.max_redraws = to_int<int>(v); }},
      {"particles", [](RunConfig& c, std::string_view v) { c.particles = to_int<int>(v); }},
      {"resample_a", [](RunConfig& c, std::string_view v) { c.resample.a = to_double(v); }},
      {"resample_threshold", [](RunConfig& c, std::string_view v) { c.resample.threshold = to_double(v); }},
      {"evaluator", [](RunConfig& c, std::string_view v) { c.evaluator.mode = parse_evaluator_mode(v); }},
      {"n_samp", [](RunConfig& c, std::string_view v) { c.evaluator.n_samp = to_int<std::uint64_t>(v); }},
      {"noise_sd", [](RunConfig& c, std::string_view v) { c.evaluator.noise_sd = to_double(v); }},
      {"bitflip", [](RunConfig& c, std::string_view v) { c.bitflip = to_double(v); }},
      {"experiments", [](RunConfig& c, std::string_view v) { c.experiments = to_int<int>(v); }},
      {"trials", [](RunConfig& c, std::string_view v) { c.trials = to_int<int>(v); }},
      {"seed", [](RunConfig& c, std::string_view v) { c.seed = to_int<std::uint64_t>(v); }},
      {"threads", [](RunConfig& c, std::string_view v) { c.threads = to_int<int>(v); }},
      {"fit_drop_fraction", [](RunConfig& c, std::string_view v) { c.fit_drop_fraction = to_double(v); }},
      {"truth", [](RunConfig& c, std::string_view v) {
         if (v == "random") c.truth = TruthMode::Random;
         else if (v == "fixed") c.truth = TruthMode::Fixed;
         else throw InvalidArgument(fmt::format("unknown truth mode '{}' (expected random or fixed)", v));
       }},
      {"truth_values", [](RunConfig& c, std::string_view v) { c.truth_values = to_doubles(v); }},
  };
  return table;
}

void require(bool ok, const char* field, const std::string& what) {
  if (!ok) throw SchemaError(0, field, what);
}

}  // namespace

Eigen::Index RunConfig::dimension() const {
  return model == ModelKind::SingleParam ? 1 : graph.dimension();
}

PghConfig RunConfig::pgh() const {
  PghConfig cfg;
  cfg.kind = experiment;
  cfg.measurement = model == ModelKind::SingleParam ? Measurement::TwoOutcome : measurement;
  cfg.t_max = t_max;
  cfg.min_separation = min_separation;
  cfg.max_redraws = max_redraws;
  return cfg;
}

void RunConfig::validate() const {
  require(max_qubits >= 2, "max_qubits", "must be at least 2");
  require(model == ModelKind::SingleParam || graph.qubits() <= max_qubits, "graph",
          fmt::format("{} qubits exceeds max_qubits = {}", graph.qubits(), max_qubits));
  require(box_lower < box_upper, "box_upper", "must exceed box_lower");
  require(jitter_variance >= 0.0, "jitter_variance", "must be non-negative");
  require(t_max > 0.0, "t_max", "must be positive");
  require(min_separation > 0.0, "min_separation", "must be positive");
  require(max_redraws >= 1, "max_redraws", "must be at least 1");
  require(particles >= 2, "particles", "must be at least 2");
  require(resample.a >= 0.0 && resample.a <= 1.0, "resample_a", "must lie in [0, 1]");
  require(resample.threshold >= 0.0 && resample.threshold <= 1.0, "resample_threshold", "must lie in [0, 1]");
  require(evaluator.n_samp >= 1, "n_samp", "must be at least 1");
  require(evaluator.noise_sd >= 0.0, "noise_sd", "must be non-negative");
  require(bitflip >= 0.0 && bitflip <= 0.5, "bitflip", "must lie in [0, 0.5]");
  require(bitflip == 0.0 || model == ModelKind::SingleParam || measurement == Measurement::TwoOutcome, "bitflip",
          "bit-flip noise needs a two-outcome measurement");
  require(experiments >= 1, "experiments", "must be at least 1");
  require(trials >= 1, "trials", "must be at least 1");
  require(threads >= 0, "threads", "must be non-negative");
  require(fit_drop_fraction >= 0.0 && fit_drop_fraction < 1.0, "fit_drop_fraction", "must lie in [0, 1)");
  require(truth == TruthMode::Random || truth_values.size() == static_cast<std::size_t>(dimension()),
          "truth_values", fmt::format("fixed truth needs {} values", dimension()));
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::map<std::string, std::size_t, std::less<>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SchemaError(line_no, std::string(line), "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw SchemaError(line_no, key, "unknown field");
    if (lines.count(key)) throw SchemaError(line_no, key, "duplicate field");
    lines[key] = line_no;
    try {
      it->second(config, value);
    } catch (const InvalidArgument& e) {
      throw SchemaError(line_no, key, e.what());
    }
  }
  try {
    config.validate();
  } catch (const SchemaError& e) {
    const auto it = lines.find(e.field());
    throw SchemaError(it == lines.end() ? 0 : it->second, e.field(),
                      std::string(e.what()).substr(e.field().size() + 2));
  }
  return config;
}

std::string emit_config(const RunConfig& c) {
  std::string truth_values;
  for (std::size_t k = 0; k < c.truth_values.size(); ++k)
    truth_values += fmt::format("{}{:.17g}", k ? ", " : "", c.truth_values[k]);
  std::string out;
  auto put = [&out](std::string_view key, const auto& value) { out += fmt::format("{} = {}\n", key, value); };
  auto putf = [&out](std::string_view key, double value) { out += fmt::format("{} = {:.17g}\n", key, value); };
  put("model", to_string(c.model));
  put("graph", c.graph.to_string());
  put("max_qubits", c.max_qubits);
  put("prior", to_string(c.prior));
  putf("box_lower", c.box_lower);
  putf("box_upper", c.box_upper);
  putf("jitter_variance", c.jitter_variance);
  put("experiment", to_string(c.experiment));
  put("measurement", to_string(c.measurement));
  putf("t_max", c.t_max);
  putf("min_separation", c.min_separation);
  put("max_redraws", c.max_redraws);
  put("particles", c.particles);
  putf("resample_a", c.resample.a);
  putf("resample_threshold", c.resample.threshold);
  put("evaluator", to_string(c.evaluator.mode));
  put("n_samp", c.evaluator.n_samp);
  putf("noise_sd", c.evaluator.noise_sd);
  putf("bitflip", c.bitflip);
  put("experiments", c.experiments);
  put("trials", c.trials);
  put("seed", c.seed);
  put("threads", c.threads);
  putf("fit_drop_fraction", c.fit_drop_fraction);
  put("truth", to_string(c.truth));
  if (!c.truth_values.empty()) put("truth_values", truth_values);
  return out;
}

std::unique_ptr<LikelihoodModel> make_model(const RunConfig& config) {
  if (config.model == ModelKind::SingleParam)
    return std::make_unique<SingleParamModel>(config.box_lower, config.box_upper);
  return std::make_unique<IsingModel>(
      config.graph, ParameterBox::cube(config.graph.dimension(), config.box_lower, config.box_upper),
      config.max_qubits);
}

namespace {

ParameterVector near_degenerate_point(const RunConfig& config, RandomStream& rng) {
  const double common = config.box_lower + (config.box_upper - config.box_lower) * rng.uniform();
  const double sd = std::sqrt(config.jitter_variance);
  ParameterVector x(config.dimension());
  for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = common + sd * rng.normal();
  return x;
}

}  // namespace

ParticleCloudd make_prior(const RunConfig& config, RandomStream& rng) {
  const Eigen::Index d = config.dimension();
  if (config.prior == PriorKind::Uniform)
    return uniform_prior(Eigen::VectorXd::Constant(d, config.box_lower).eval(),
                         Eigen::VectorXd::Constant(d, config.box_upper).eval(), config.particles, rng);
  Eigen::MatrixXd pos(d, config.particles);
  for (Eigen::Index j = 0; j < pos.cols(); ++j) pos.col(j) = near_degenerate_point(config, rng);
  return ParticleCloudd::uniform(std::move(pos));
}

ParameterVector draw_truth(const RunConfig& config, RandomStream& rng) {
  if (config.truth == TruthMode::Fixed)
    return Eigen::Map<const Eigen::VectorXd>(config.truth_values.data(), config.dimension());
  if (config.prior == PriorKind::NearDegenerate) return near_degenerate_point(config, rng);
  ParameterVector x(config.dimension());
  for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = config.box_lower + (config.box_upper - config.box_lower) * rng.uniform();
  return x;
}

}  // namespace hamlearn
