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

#include "hamlearn/validation.hpp"

#include <algorithm>
#include <cmath>

#include "hamlearn/dense_oracle.hpp"
#include "hamlearn/ising_model.hpp"
#include "hamlearn/risk.hpp"

namespace hamlearn {

namespace {

ParameterVector uniform_vector(Eigen::Index d, RandomStream& rng) {
  ParameterVector v(d);
  for (Eigen::Index k = 0; k < d; ++k) v(k) = 2.0 * rng.uniform() - 1.0;
  return v;
}

}  // namespace

OracleComparison compare_with_dense_oracle(const InteractionGraph& graph, int instances, double t_max,
                                           RandomStream& rng) {
  OracleComparison out;
  const Eigen::Index d = graph.dimension();
  for (int k = 0; k < instances; ++k) {
    ExperimentSpec exp;
    exp.kind = ExperimentKind::IQLE;
    exp.measurement = Measurement::FullBasis;
    exp.time = t_max * (1.0 - rng.uniform());
    const ParameterVector x = uniform_vector(d, rng);
    exp.inversion = uniform_vector(d, rng);
    const Eigen::VectorXd fast = ising_outcome_distribution(graph, x, exp);
    const Eigen::VectorXd dense = dense_oracle_distribution(graph, x, exp);
    out.max_abs_error = std::max(out.max_abs_error, (fast - dense).cwiseAbs().maxCoeff());
    ++out.instances;
  }
  return out;
}

double compare_posterior_mean_forms(int instances, RandomStream& rng) {
  double worst = 0.0;
  for (int k = 0; k < instances; ++k) {
    const GaussianPrior1D prior{2.0 * rng.uniform() - 1.0, 0.01 + rng.uniform()};
    const double x_inv = prior.mu + prior.sigma * rng.normal();
    const double t = 3.0 * rng.uniform() / prior.sigma;
    for (std::uint64_t outcome : {0, 1}) {
      const auto moments = posterior_moments_1d({outcome}, prior, x_inv, t);
      if (moments.evidence < 1e-8) continue;
      const double closed = posterior_mean_1d({outcome}, prior, x_inv, t);
      worst = std::max(worst, std::abs(closed - moments.mean) / prior.sigma);
    }
  }
  return worst;
}

}  // namespace hamlearn
