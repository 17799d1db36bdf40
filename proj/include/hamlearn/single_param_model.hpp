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

#ifndef HAMLEARN_SINGLE_PARAM_MODEL_HPP
#define HAMLEARN_SINGLE_PARAM_MODEL_HPP

#include "hamlearn/likelihood_model.hpp"

namespace hamlearn {

/// Pr(d | x; x₋, t) = ½(1 + (1 − 2d) cos[2(x − x₋)t]) for d ∈ {0, 1}.
double single_param_likelihood(Datum d, double x, double x_inv, double t);

/// Two-qubit H(x) = x Z₁Z₂ with a two-outcome measurement; x₋ = 0 for CLE/QLE.
class SingleParamModel final : public LikelihoodModel {
 public:
  explicit SingleParamModel(double lower = -0.5, double upper = 0.5);

  Eigen::Index dimension() const override { return 1; }
  ParameterBox parameter_box() const override { return box_; }
  std::size_t outcome_count(const ExperimentSpec&) const override { return 2; }
  Eigen::VectorXd outcome_distribution(const ParameterVector& x, const ExperimentSpec& experiment) const override;
  Eigen::VectorXd likelihoods(Datum datum, const Eigen::MatrixXd& positions,
                              const ExperimentSpec& experiment) const override;

 private:
  ParameterBox box_;
};

}  // namespace hamlearn

#endif  // HAMLEARN_SINGLE_PARAM_MODEL_HPP
