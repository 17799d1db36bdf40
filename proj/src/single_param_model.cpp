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

#include "hamlearn/single_param_model.hpp"

#include <cmath>

#include "hamlearn/errors.hpp"

namespace hamlearn {

double single_param_likelihood(Datum d, double x, double x_inv, double t) {
  if (d.outcome > 1) throw InvalidArgument("single-parameter model has outcomes 0 and 1 only");
  const double c = std::cos(2.0 * (x - x_inv) * t);
  return d.outcome == 0 ? 0.5 * (1.0 + c) : 0.5 * (1.0 - c);
}

SingleParamModel::SingleParamModel(double lower, double upper) : box_(ParameterBox::cube(1, lower, upper)) {}

namespace {
double inversion_of(const ExperimentSpec& experiment) {
  return experiment.kind == ExperimentKind::IQLE ? (*experiment.inversion)(0) : 0.0;
}
}  // namespace

Eigen::VectorXd SingleParamModel::outcome_distribution(const ParameterVector& x,
                                                       const ExperimentSpec& experiment) const {
  validate(experiment);
  if (x.size() != 1) throw DimensionMismatch("single-parameter model takes one parameter");
  const double p0 = single_param_likelihood({0}, x(0), inversion_of(experiment), experiment.time);
  Eigen::VectorXd dist(2);
  dist << p0, 1.0 - p0;
  return dist;
}

Eigen::VectorXd SingleParamModel::likelihoods(Datum datum, const Eigen::MatrixXd& positions,
                                              const ExperimentSpec& experiment) const {
  validate(datum, experiment);
  if (positions.rows() != 1) throw DimensionMismatch("single-parameter model takes one parameter");
  const double x_inv = inversion_of(experiment);
  Eigen::VectorXd out(positions.cols());
  for (Eigen::Index j = 0; j < positions.cols(); ++j)
    out(j) = std::max(single_param_likelihood(datum, positions(0, j), x_inv, experiment.time), kLikelihoodFloor);
  return out;
}

}  // namespace hamlearn
