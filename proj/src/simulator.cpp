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

#include "hamlearn/simulator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hamlearn/errors.hpp"
#include "hamlearn/noise.hpp"

namespace hamlearn {

namespace {

double binomial_fraction(double p, std::uint64_t n, RandomStream& rng) {
  p = std::clamp(p, 0.0, 1.0);
  std::binomial_distribution<std::uint64_t> draw(n, p);
  return static_cast<double>(draw(rng.engine())) / static_cast<double>(n);
}

}  // namespace

Datum sample_outcome(const LikelihoodModel& model, const ParameterVector& truth,
                     const ExperimentSpec& experiment, RandomStream& rng, double bitflip) {
  Eigen::VectorXd dist = model.outcome_distribution(truth, experiment);
  if (bitflip > 0.0) dist = bitflip_distribution(bitflip, dist);
  const double u = rng.uniform() * dist.sum();
  double acc = 0.0;
  Eigen::Index last = 0;
  for (Eigen::Index k = 0; k < dist.size(); ++k) {
    if (dist(k) <= 0.0) continue;
    last = k;
    acc += dist(k);
    if (u < acc) return {static_cast<std::uint64_t>(k)};
  }
  return {static_cast<std::uint64_t>(last)};
}

double estimate_likelihood_sampled(const LikelihoodModel& model, const ParameterVector& x,
                                   const ExperimentSpec& experiment, Datum target, std::uint64_t n_samp,
                                   RandomStream& rng) {
  if (n_samp < 1) throw InvalidArgument("estimate_likelihood_sampled: n_samp must be at least 1");
  model.validate(target, experiment);
  const double p = model.outcome_distribution(x, experiment)(static_cast<Eigen::Index>(target.outcome));
  return std::max(binomial_fraction(p, n_samp, rng), kLikelihoodFloor);
}

std::uint64_t required_samples(double max_like, double expected_like, double epsilon) {
  if (!(max_like >= 0.0 && max_like <= 1.0)) throw InvalidArgument("required_samples: max_like outside [0, 1]");
  if (!(expected_like > 0.0 && expected_like <= 1.0))
    throw InvalidArgument("required_samples: expected_like outside (0, 1]");
  if (!(epsilon > 0.0)) throw InvalidArgument("required_samples: epsilon must be positive");
  const double scaled = epsilon * expected_like;
  const double value = max_like * (1.0 - max_like) / (scaled * scaled);
  // Absorb rounding in ε² so exact ratios do not round up by one.
  return static_cast<std::uint64_t>(std::ceil(value * (1.0 - 1e-12)));
}

SampleBudget sample_budget(const Eigen::VectorXd& likelihoods, const Eigen::VectorXd& weights, double epsilon) {
  if (likelihoods.size() != weights.size() || likelihoods.size() == 0)
    throw DimensionMismatch("sample_budget: likelihoods and weights must be non-empty and of equal size");
  SampleBudget budget;
  budget.epsilon = epsilon;
  budget.n_samp_per_particle = required_samples(likelihoods.maxCoeff(), likelihoods.dot(weights), epsilon);
  budget.n_sim_total = budget.n_samp_per_particle * static_cast<std::uint64_t>(likelihoods.size());
  return budget;
}

double stability_simulation_count(double max_hamiltonian_norm, std::uint64_t particles, double delta,
                                  double max_like, double expected_like) {
  if (!(delta > 0.0) || !(expected_like > 0.0)) throw InvalidArgument("stability_simulation_count: bad arguments");
  const double h4 = std::pow(max_hamiltonian_norm, 4);
  return h4 * static_cast<double>(particles) * max_like * (1.0 - max_like) /
         (delta * delta * expected_like * expected_like);
}

std::string_view to_string(EvaluatorMode mode) {
  switch (mode) {
    case EvaluatorMode::Exact: return "exact";
    case EvaluatorMode::Sampled: return "sampled";
    case EvaluatorMode::NoisyExact: return "noisy";
  }
  return "?";
}

EvaluatorMode parse_evaluator_mode(std::string_view text) {
  if (text == "exact") return EvaluatorMode::Exact;
  if (text == "sampled") return EvaluatorMode::Sampled;
  if (text == "noisy") return EvaluatorMode::NoisyExact;
  throw InvalidArgument(fmt::format("unknown evaluator '{}' (expected exact, sampled or noisy)", text));
}

void LikelihoodEvaluator::validate() const {
  if (mode == EvaluatorMode::Sampled && n_samp < 1) throw InvalidArgument("sampled evaluator needs n_samp >= 1");
  if (mode == EvaluatorMode::NoisyExact && !(noise_sd >= 0.0))
    throw InvalidArgument("noisy evaluator needs a non-negative noise level");
}

Eigen::VectorXd LikelihoodEvaluator::likelihoods(const LikelihoodModel& model, Datum datum,
                                                 const Eigen::MatrixXd& positions, const ExperimentSpec& experiment,
                                                 RandomStream& rng) const {
  Eigen::VectorXd like = model.likelihoods(datum, positions, experiment);
  switch (mode) {
    case EvaluatorMode::Exact:
      break;
    case EvaluatorMode::Sampled:
      for (Eigen::Index j = 0; j < like.size(); ++j)
        like(j) = std::max(binomial_fraction(like(j), n_samp, rng), kLikelihoodFloor);
      break;
    case EvaluatorMode::NoisyExact:
      for (Eigen::Index j = 0; j < like.size(); ++j) like(j) = noisy_likelihood(like(j), noise_sd, rng);
      break;
  }
  return like;
}

}  // namespace hamlearn
