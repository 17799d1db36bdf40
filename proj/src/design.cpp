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

#include "hamlearn/design.hpp"

#include <fmt/format.h>

#include <cmath>

#include "hamlearn/errors.hpp"
#include "hamlearn/smc.hpp"

namespace hamlearn {

void PghConfig::validate() const {
  if (!(t_max > 0.0)) throw InvalidArgument("pgh: t_max must be positive");
  if (!(min_separation > 0.0)) throw InvalidArgument("pgh: min_separation must be positive");
  if (max_redraws < 1) throw InvalidArgument("pgh: max_redraws must be at least 1");
}

namespace {

bool collapsed(const ParticleCloudd& cloud, double tolerance) {
  Eigen::Index anchor = 0;
  while (anchor < cloud.size() && cloud.weight(anchor) == 0.0) ++anchor;
  for (Eigen::Index j = anchor + 1; j < cloud.size(); ++j)
    if (cloud.weight(j) > 0.0 && (cloud.position(j) - cloud.position(anchor)).norm() > tolerance) return false;
  return true;
}

}  // namespace

ExperimentSpec pgh(const ParticleCloudd& cloud, const PghConfig& config, RandomStream& rng) {
  config.validate();
  if (collapsed(cloud, config.min_separation))
    throw DegenerateCloud("pgh: all particles with positive weight coincide");

  const auto cdf = detail::cumulative_weights(cloud);
  const auto guess = cloud.position(detail::draw_index(cdf, rng));
  for (int attempt = 0; attempt < config.max_redraws; ++attempt) {
    const auto second = cloud.position(detail::draw_index(cdf, rng));
    const double distance = (second - guess).norm();
    if (distance <= config.min_separation) continue;

    ExperimentSpec spec;
    spec.kind = config.kind;
    spec.measurement = config.measurement;
    spec.time = std::min(config.t_max, 1.0 / distance);
    if (config.kind == ExperimentKind::IQLE) spec.inversion = ParameterVector(guess);
    return spec;
  }
  throw DegenerateCloud(fmt::format("pgh: no distinct second particle after {} redraws", config.max_redraws));
}

std::vector<ExperimentSpec> fixed_schedule(const std::vector<double>& times, ExperimentKind kind,
                                           Measurement measurement,
                                           const std::optional<ParameterVector>& inversion) {
  std::vector<ExperimentSpec> out;
  out.reserve(times.size());
  for (double t : times) {
    if (!(t > 0.0)) throw InvalidArgument(fmt::format("fixed_schedule: time {} is not positive", t));
    out.push_back({kind, t, kind == ExperimentKind::IQLE ? inversion : std::nullopt, measurement});
  }
  return out;
}

std::vector<double> geometric_times(double base, int count, double scale) {
  std::vector<double> out;
  for (int k = 1; k <= count; ++k) out.push_back(scale * std::pow(base, k));
  return out;
}

}  // namespace hamlearn
