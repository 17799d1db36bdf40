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

#ifndef HAMLEARN_SIMULATOR_HPP
#define HAMLEARN_SIMULATOR_HPP

#include <cstdint>
#include <string_view>

#include "hamlearn/likelihood_model.hpp"
#include "hamlearn/random.hpp"

namespace hamlearn {

/// Draws the untrusted device's measurement outcome at the hidden truth.
/// `bitflip` flips two-outcome results with that probability.
Datum sample_outcome(const LikelihoodModel& model, const ParameterVector& truth,
                     const ExperimentSpec& experiment, RandomStream& rng, double bitflip = 0.0);

/// Fraction of `n_samp` simulated experiments returning `target`, floored.
double estimate_likelihood_sampled(const LikelihoodModel& model, const ParameterVector& x,
                                   const ExperimentSpec& experiment, Datum target, std::uint64_t n_samp,
                                   RandomStream& rng);

/// ⌈p_max(1 − p_max) / (ε · p_expected)²⌉: samples per particle that keep the
/// 1-norm error of one update near ε. Asymptotic bound with unit constant.
std::uint64_t required_samples(double max_like, double expected_like, double epsilon);

/// Sample counts for one update, from per-particle likelihoods of the observed datum.
struct SampleBudget {
  double epsilon = 0.0;
  std::uint64_t n_samp_per_particle = 0;
  std::uint64_t n_sim_total = 0;
};

SampleBudget sample_budget(const Eigen::VectorXd& likelihoods, const Eigen::VectorXd& weights, double epsilon);

/// Simulations per update that keep posterior-variance drift within δ:
/// ‖H‖⁴ N p_max(1 − p_max) / (δ p_expected)². Reporting only, unit constant.
double stability_simulation_count(double max_hamiltonian_norm, std::uint64_t particles, double delta,
                                  double max_like, double expected_like);

enum class EvaluatorMode { Exact, Sampled, NoisyExact };

std::string_view to_string(EvaluatorMode mode);
EvaluatorMode parse_evaluator_mode(std::string_view text);

/// The trusted simulator: exact likelihoods, finite-sample frequencies, or
/// exact likelihoods with additive Gaussian error.
struct LikelihoodEvaluator {
  EvaluatorMode mode = EvaluatorMode::Exact;
  std::uint64_t n_samp = 100;
  double noise_sd = 0.0;

  void validate() const;

  /// Per-particle likelihood estimates. Stochastic modes consume `rng`
  /// sequentially in particle order.
  Eigen::VectorXd likelihoods(const LikelihoodModel& model, Datum datum, const Eigen::MatrixXd& positions,
                              const ExperimentSpec& experiment, RandomStream& rng) const;

  /// Simulator invocations charged per particle per update.
  std::uint64_t simulations_per_particle() const { return mode == EvaluatorMode::Sampled ? n_samp : 1; }

  friend bool operator==(const LikelihoodEvaluator&, const LikelihoodEvaluator&) = default;
};

}  // namespace hamlearn

#endif  // HAMLEARN_SIMULATOR_HPP
