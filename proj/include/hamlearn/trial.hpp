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

#ifndef HAMLEARN_TRIAL_HPP
#define HAMLEARN_TRIAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hamlearn/config.hpp"
#include "hamlearn/decay_fit.hpp"

namespace hamlearn {

/// State after one completed experiment.
struct TrajectoryRecord {
  int experiment_index = 0;
  double loss = 0.0;
  double ess = 0.0;
  bool resampled = false;
  double time = 0.0;
  std::uint64_t simulator_calls = 0;
  double wall_clock = 0.0;
  bool update_skipped = false;
};

struct LossTrajectory {
  /// Loss of the prior mean before any data.
  double initial_loss = 0.0;
  std::vector<TrajectoryRecord> records;
  /// True when the posterior collapsed and the trial stopped early.
  bool converged = false;
  int skipped_updates = 0;

  /// (index, loss) with index 0 the prior; carried forward to `length`
  /// experiments when the trial stopped early.
  std::vector<LossPoint> loss_series(int length) const;
};

/// Replaces the particle guess heuristic in run_trial when set.
using ExperimentChooser = std::function<ExperimentSpec(const ParticleCloudd&, RandomStream&)>;

/// One learning run: design, measure at `truth`, update, resample when due.
/// ZeroTotalWeight updates are skipped; DegenerateCloud ends the run.
LossTrajectory run_trial(const RunConfig& config, const LikelihoodModel& model, const ParameterVector& truth,
                         RandomStream& rng, const ExperimentChooser& chooser = {});

struct TrialResult {
  std::uint64_t seed = 0;
  ParameterVector truth;
  LossTrajectory trajectory;
  std::optional<DecayFit> fit;
};

struct SummaryRow {
  int experiment_index = 0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
};

struct EnsembleResult {
  std::vector<TrialResult> trials;
  std::vector<SummaryRow> summary;
  std::optional<DecayFit> median_fit;
};

/// Seeds of the per-trial streams derived from the master seed.
std::vector<std::uint64_t> trial_seeds(const RunConfig& config);

/// Runs one trial per seed (truth drawn from the prior unless fixed) in
/// parallel over `config.threads` workers; results are in seed order.
std::vector<TrialResult> run_trials(const RunConfig& config, const std::vector<std::uint64_t>& seeds);

/// Linear-interpolation percentile (q in [0, 1]) of unsorted values.
double percentile(std::vector<double> values, double q);

/// Per-index 25th/50th/75th percentile of loss across trials, index 0 the prior.
std::vector<SummaryRow> summarize(const std::vector<TrialResult>& trials, int experiments);

EnsembleResult run_ensemble(const RunConfig& config);

struct ScalingRow {
  int qubits = 0;
  Eigen::Index dimension = 0;
  double median_gamma = 0.0;
  std::vector<double> gammas;
};

/// Runs an ensemble per qubit count with `graph_family(n)` and reports the
/// median of the per-trial decay exponents.
std::vector<ScalingRow> scaling_study(const RunConfig& base, const std::vector<int>& qubits,
                                      const std::function<InteractionGraph(int)>& graph_family);

}  // namespace hamlearn

#endif  // HAMLEARN_TRIAL_HPP
