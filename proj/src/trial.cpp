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

#include "hamlearn/trial.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "hamlearn/errors.hpp"
#include "hamlearn/smc.hpp"

namespace hamlearn {

std::vector<LossPoint> LossTrajectory::loss_series(int length) const {
  std::vector<LossPoint> out;
  out.push_back({0.0, initial_loss});
  for (const auto& r : records) out.push_back({static_cast<double>(r.experiment_index), r.loss});
  const double last = out.back().loss;
  for (int k = static_cast<int>(out.size()); k <= length; ++k) out.push_back({static_cast<double>(k), last});
  return out;
}

LossTrajectory run_trial(const RunConfig& config, const LikelihoodModel& model, const ParameterVector& truth,
                         RandomStream& rng, const ExperimentChooser& chooser) {
  if (truth.size() != model.dimension()) throw DimensionMismatch("run_trial: truth dimension does not match model");
  config.evaluator.validate();
  const auto start = std::chrono::steady_clock::now();
  const PghConfig pgh_config = config.pgh();
  const auto particles = static_cast<std::uint64_t>(config.particles);

  ParticleCloudd cloud = make_prior(config, rng);
  LossTrajectory trajectory;
  trajectory.initial_loss = quadratic_loss(posterior_mean(cloud), truth);
  std::uint64_t calls = 0;

  for (int k = 1; k <= config.experiments; ++k) {
    ExperimentSpec experiment;
    try {
      experiment = chooser ? chooser(cloud, rng) : pgh(cloud, pgh_config, rng);
    } catch (const DegenerateCloud&) {
      trajectory.converged = true;
      break;
    }
    const Datum datum = sample_outcome(model, truth, experiment, rng, config.bitflip);
    const Eigen::VectorXd like = config.evaluator.likelihoods(model, datum, cloud.positions(), experiment, rng);
    calls += particles * config.evaluator.simulations_per_particle();

    TrajectoryRecord record;
    record.experiment_index = k;
    record.time = experiment.time;
    try {
      auto update = bayes_update(cloud, like, config.resample.threshold);
      cloud = std::move(update.cloud);
      record.ess = update.ess;
      if (update.resample_due) {
        cloud = liu_west_resample(cloud, config.resample.a, rng);
        record.resampled = true;
        record.ess = effective_sample_size(cloud);
      }
    } catch (const ZeroTotalWeight&) {
      ++trajectory.skipped_updates;
      record.update_skipped = true;
      record.ess = effective_sample_size(cloud);
    }
    record.loss = quadratic_loss(posterior_mean(cloud), truth);
    record.simulator_calls = calls;
    record.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    trajectory.records.push_back(record);
  }
  return trajectory;
}

std::vector<std::uint64_t> trial_seeds(const RunConfig& config) {
  const RandomStream master(config.seed);
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < config.trials; ++k) seeds.push_back(master.split(static_cast<std::uint64_t>(k))());
  return seeds;
}

std::vector<TrialResult> run_trials(const RunConfig& config, const std::vector<std::uint64_t>& seeds) {
  config.validate();
  const auto model = make_model(config);
  std::vector<TrialResult> results(seeds.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < seeds.size(); k = next++) {
      const RandomStream stream(seeds[k]);
      RandomStream truth_rng = stream.split(0);
      RandomStream run_rng = stream.split(1);
      TrialResult& r = results[k];
      r.seed = seeds[k];
      r.truth = draw_truth(config, truth_rng);
      r.trajectory = run_trial(config, *model, r.truth, run_rng);
      try {
        r.fit = fit_decay(r.trajectory.loss_series(config.experiments), config.fit_drop_fraction);
      } catch (const InsufficientData&) {
        r.fit.reset();
      }
    }
  };

  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(seeds.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw InsufficientData("percentile of an empty set");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<SummaryRow> summarize(const std::vector<TrialResult>& trials, int experiments) {
  std::vector<std::vector<LossPoint>> series;
  for (const auto& t : trials) series.push_back(t.trajectory.loss_series(experiments));
  std::vector<SummaryRow> rows;
  std::vector<double> column(trials.size());
  for (int k = 0; k <= experiments; ++k) {
    for (std::size_t t = 0; t < trials.size(); ++t) column[t] = series[t][static_cast<std::size_t>(k)].loss;
    rows.push_back({k, percentile(column, 0.25), percentile(column, 0.5), percentile(column, 0.75)});
  }
  return rows;
}

EnsembleResult run_ensemble(const RunConfig& config) {
  EnsembleResult result;
  result.trials = run_trials(config, trial_seeds(config));
  result.summary = summarize(result.trials, config.experiments);
  std::vector<LossPoint> median;
  for (const auto& row : result.summary) median.push_back({static_cast<double>(row.experiment_index), row.p50});
  try {
    result.median_fit = fit_decay(median, config.fit_drop_fraction);
  } catch (const InsufficientData&) {
  }
  return result;
}

std::vector<ScalingRow> scaling_study(const RunConfig& base, const std::vector<int>& qubits,
                                      const std::function<InteractionGraph(int)>& graph_family) {
  if (qubits.size() < 2) throw InvalidArgument("scaling_study needs at least two qubit counts");
  std::vector<ScalingRow> rows;
  for (int n : qubits) {
    RunConfig config = base;
    config.graph = graph_family(n);
    const auto trials = run_trials(config, trial_seeds(config));
    ScalingRow row{n, config.dimension(), 0.0, {}};
    for (const auto& t : trials)
      if (t.fit) row.gammas.push_back(t.fit->gamma);
    row.median_gamma = row.gammas.empty() ? std::nan("") : percentile(row.gammas, 0.5);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hamlearn
