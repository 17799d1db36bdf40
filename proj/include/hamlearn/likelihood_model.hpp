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

#ifndef HAMLEARN_LIKELIHOOD_MODEL_HPP
#define HAMLEARN_LIKELIHOOD_MODEL_HPP

#include <Eigen/Dense>

#include <cstddef>

#include "hamlearn/experiment.hpp"
#include "hamlearn/particle_cloud.hpp"

namespace hamlearn {

/// Smallest likelihood ever returned for an observed datum. Keeps the
/// weight update away from pure underflow.
inline constexpr double kLikelihoodFloor = 1e-300;

/// Axis-aligned box of admissible parameters.
struct ParameterBox {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  static ParameterBox cube(Eigen::Index dimension, double lo, double hi) {
    return {Eigen::VectorXd::Constant(dimension, lo), Eigen::VectorXd::Constant(dimension, hi)};
  }
  Eigen::Index dimension() const { return lower.size(); }
  bool contains(const ParameterVector& x) const {
    return x.size() == lower.size() && (x.array() >= lower.array()).all() &&
           (x.array() <= upper.array()).all();
  }
};

/// Maps (datum, parameters, experiment) to an outcome probability.
class LikelihoodModel {
 public:
  virtual ~LikelihoodModel() = default;

  virtual Eigen::Index dimension() const = 0;
  virtual ParameterBox parameter_box() const = 0;
  virtual std::size_t outcome_count(const ExperimentSpec& experiment) const = 0;

  /// Full outcome distribution; sums to one.
  virtual Eigen::VectorXd outcome_distribution(const ParameterVector& x,
                                               const ExperimentSpec& experiment) const = 0;

  /// Pr(datum | x), floored at kLikelihoodFloor.
  virtual double likelihood(Datum datum, const ParameterVector& x, const ExperimentSpec& experiment) const;

  /// Pr(datum | x_j) for every column x_j of `positions`, floored.
  virtual Eigen::VectorXd likelihoods(Datum datum, const Eigen::MatrixXd& positions,
                                      const ExperimentSpec& experiment) const;

  /// Checks the experiment against this model; throws on mismatch.
  void validate(const ExperimentSpec& experiment) const;
  /// Checks a datum index against the outcome space.
  void validate(Datum datum, const ExperimentSpec& experiment) const;
};

}  // namespace hamlearn

#endif  // HAMLEARN_LIKELIHOOD_MODEL_HPP
