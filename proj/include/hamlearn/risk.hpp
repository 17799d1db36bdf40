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

#ifndef HAMLEARN_RISK_HPP
#define HAMLEARN_RISK_HPP

#include <functional>
#include <vector>

#include "hamlearn/experiment.hpp"
#include "hamlearn/likelihood_model.hpp"
#include "hamlearn/particle_cloud.hpp"
#include "hamlearn/random.hpp"

namespace hamlearn {

/// Single-parameter risk analysis for H(x) = x Z₁Z₂ with prior N(μ, σ²) and
/// likelihood Pr(d | x; x₋, t) = ½(1 + (1 − 2d) cos[2(x − x₋)t]).

struct GaussianPrior1D {
  double mu = 0.0;
  double sigma = 1.0;

  void validate() const;
};

/// Closed-form posterior mean after observing d. Evaluated in complex
/// arithmetic; throws if the imaginary residue exceeds 1e-10.
double posterior_mean_1d(Datum d, const GaussianPrior1D& prior, double x_inv, double t);

struct PosteriorMoments1D {
  double evidence = 0.0;  ///< Pr(d), noiseless model
  double mean = 0.0;
  double variance = 0.0;
};

/// Posterior moments by adaptive Gauss-Kronrod quadrature over μ ± 10σ.
PosteriorMoments1D posterior_moments_1d(Datum d, const GaussianPrior1D& prior, double x_inv, double t);

/// E_d[Var(x | d)] where d follows the bit-flip noisy model with rate alpha
/// and the posterior uses the noiseless model. Outcomes with zero evidence
/// leave the prior unchanged.
double bayes_risk_1d(const GaussianPrior1D& prior, double x_inv, double t, double alpha);

struct RiskEnvelope {
  double lower = 0.0;
  double upper = 0.0;
};

/// σ²(1 − 4σ²t²e^{−4σ²t²}) ≤ r ≤ σ².
RiskEnvelope risk_envelope(double t, double sigma);

/// Minimizer of the envelope lower bound, 1/(2σ).
double optimal_time(double sigma);

struct RiskPoint {
  double x_inv = 0.0;
  double t = 0.0;
  double alpha = 0.0;
  double risk = 0.0;
  double stderr_ = 0.0;
};

enum class InversionStrategy { None, Fixed, MuPlusSigma, MuMinusSigma, PghSampled };

struct InversionRule {
  InversionStrategy strategy = InversionStrategy::MuPlusSigma;
  double fixed_value = 0.0;
  /// Inversion draws per grid point for PghSampled.
  int draws = 1000;
};

/// bayes_risk_1d over a grid of times. PghSampled averages over x₋ drawn from
/// the prior and reports the mean draw as x_inv together with a standard error.
std::vector<RiskPoint> risk_scan(const GaussianPrior1D& prior, const InversionRule& rule,
                                 const std::vector<double>& t_grid, double alpha, RandomStream& rng);

struct MonteCarloRisk {
  double mean = 0.0;
  double stderr_ = 0.0;
  int samples = 0;
  /// Draws whose update was rejected for zero total weight.
  int rejected = 0;
};

using ExperimentDesign = std::function<ExperimentSpec(RandomStream&)>;

/// Monte Carlo expected posterior trace-covariance after one experiment:
/// truth from the prior cloud, datum from the (bit-flip noisy) model, one
/// Bayes update of the cloud.
MonteCarloRisk bayes_risk_nd(const LikelihoodModel& model, const ParticleCloudd& prior, const ExperimentDesign& design,
                             double alpha, int n_mc, RandomStream& rng);

MonteCarloRisk bayes_risk_nd(const LikelihoodModel& model, const ParticleCloudd& prior,
                             const ExperimentSpec& experiment, double alpha, int n_mc, RandomStream& rng);

/// IQLE design generalizing x₋ = μ + σ, t = 1/(2σ): the inversion sits at
/// distance s = √tr(Cov) from the prior mean along a uniformly random
/// direction, and t = 1/(2s).
ExperimentDesign spread_inversion_design(const ParticleCloudd& prior, Measurement measurement);

/// Particles on a uniform grid over μ ± width·σ weighted by the Gaussian
/// density; a near-deterministic stand-in for N(μ, σ²).
ParticleCloudd gaussian_grid_cloud(const GaussianPrior1D& prior, int particles, double width = 8.0);

}  // namespace hamlearn

#endif  // HAMLEARN_RISK_HPP
