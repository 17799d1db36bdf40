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

#ifndef HAMLEARN_CONFIG_HPP
#define HAMLEARN_CONFIG_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hamlearn/design.hpp"
#include "hamlearn/experiment.hpp"
#include "hamlearn/graph.hpp"
#include "hamlearn/likelihood_model.hpp"
#include "hamlearn/simulator.hpp"
#include "hamlearn/smc.hpp"

namespace hamlearn {

enum class ModelKind { Ising, SingleParam };

/// Uniform: i.i.d. uniform over the box. NearDegenerate: one common coupling
/// uniform over [box_lower, box_upper] plus independent N(0, jitter_variance)
/// per edge.
enum class PriorKind { Uniform, NearDegenerate };

enum class TruthMode { Random, Fixed };

/// Everything needed to run a batch of learning trials.
struct RunConfig {
  ModelKind model = ModelKind::Ising;
  InteractionGraph graph = InteractionGraph::complete(4);
  int max_qubits = 14;
  PriorKind prior = PriorKind::Uniform;
  double box_lower = -0.5;
  double box_upper = 0.5;
  double jitter_variance = 1e-4;

  ExperimentKind experiment = ExperimentKind::IQLE;
  Measurement measurement = Measurement::FullBasis;
  double t_max = 1e6;
  double min_separation = 1e-12;
  int max_redraws = 100;

  int particles = 2000;
  ResampleConfig resample;
  LikelihoodEvaluator evaluator;
  double bitflip = 0.0;

  int experiments = 200;
  int trials = 10;
  std::uint64_t seed = 1;
  int threads = 0;
  double fit_drop_fraction = 0.1;

  TruthMode truth = TruthMode::Random;
  std::vector<double> truth_values;

  Eigen::Index dimension() const;
  PghConfig pgh() const;
  /// Throws SchemaError naming the offending field.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys, bad
/// values and invalid combinations raise SchemaError with the line number.
RunConfig parse_config(std::string_view text);

/// Serializes every field; parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& config);

std::unique_ptr<LikelihoodModel> make_model(const RunConfig& config);

/// Initial particle cloud for the configured prior.
ParticleCloudd make_prior(const RunConfig& config, RandomStream& rng);

/// Truth for one trial: the fixed values, or a draw from the prior.
ParameterVector draw_truth(const RunConfig& config, RandomStream& rng);

}  // namespace hamlearn

#endif  // HAMLEARN_CONFIG_HPP
