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

#include "hamlearn/experiment.hpp"

#include <fmt/format.h>

#include <cmath>

#include "hamlearn/errors.hpp"
#include "hamlearn/likelihood_model.hpp"

namespace hamlearn {

void ExperimentSpec::validate(Eigen::Index dimension) const {
  if (!(time > 0.0) || !std::isfinite(time))
    throw InvalidArgument(fmt::format("experiment time must be positive and finite, got {}", time));
  if (kind == ExperimentKind::IQLE) {
    if (!inversion) throw InvalidArgument("IQLE experiment requires inversion parameters");
    if (inversion->size() != dimension)
      throw DimensionMismatch(
          fmt::format("inversion has {} parameters, model has {}", inversion->size(), dimension));
    if (!inversion->allFinite()) throw InvalidArgument("inversion parameters must be finite");
  } else if (inversion) {
    throw InvalidArgument(fmt::format("{} experiment must not carry inversion parameters", to_string(kind)));
  }
}

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::CLE: return "cle";
    case ExperimentKind::QLE: return "qle";
    case ExperimentKind::IQLE: return "iqle";
  }
  return "?";
}

std::string_view to_string(Measurement measurement) {
  return measurement == Measurement::FullBasis ? "full" : "two_outcome";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  if (text == "cle") return ExperimentKind::CLE;
  if (text == "qle") return ExperimentKind::QLE;
  if (text == "iqle") return ExperimentKind::IQLE;
  throw InvalidArgument(fmt::format("unknown experiment kind '{}' (expected cle, qle or iqle)", text));
}

Measurement parse_measurement(std::string_view text) {
  if (text == "full") return Measurement::FullBasis;
  if (text == "two_outcome") return Measurement::TwoOutcome;
  throw InvalidArgument(fmt::format("unknown measurement '{}' (expected full or two_outcome)", text));
}

double LikelihoodModel::likelihood(Datum datum, const ParameterVector& x,
                                   const ExperimentSpec& experiment) const {
  validate(datum, experiment);
  const Eigen::VectorXd dist = outcome_distribution(x, experiment);
  return std::max(dist(static_cast<Eigen::Index>(datum.outcome)), kLikelihoodFloor);
}

Eigen::VectorXd LikelihoodModel::likelihoods(Datum datum, const Eigen::MatrixXd& positions,
                                             const ExperimentSpec& experiment) const {
  Eigen::VectorXd out(positions.cols());
  for (Eigen::Index j = 0; j < positions.cols(); ++j)
    out(j) = likelihood(datum, positions.col(j), experiment);
  return out;
}

void LikelihoodModel::validate(const ExperimentSpec& experiment) const {
  experiment.validate(dimension());
}

void LikelihoodModel::validate(Datum datum, const ExperimentSpec& experiment) const {
  validate(experiment);
  if (datum.outcome >= outcome_count(experiment))
    throw InvalidArgument(fmt::format("outcome {} outside outcome space of size {}", datum.outcome,
                                      outcome_count(experiment)));
}

}  // namespace hamlearn
