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

#ifndef HAMLEARN_DESIGN_HPP
#define HAMLEARN_DESIGN_HPP

#include <optional>
#include <vector>

#include "hamlearn/experiment.hpp"
#include "hamlearn/particle_cloud.hpp"
#include "hamlearn/random.hpp"

namespace hamlearn {

/// Free constants of the particle guess heuristic.
struct PghConfig {
  ExperimentKind kind = ExperimentKind::IQLE;
  Measurement measurement = Measurement::FullBasis;
  double t_max = 1e6;
  /// Two draws closer than this count as the same particle.
  double min_separation = 1e-12;
  int max_redraws = 100;

  void validate() const;
};

/// Particle guess heuristic.
///
/// Draws x₋ from the cloud in proportion to weight, redraws a second
/// particle x₋′ until it is farther than `min_separation` from x₋, and sets
/// t = min(t_max, 1/‖x₋′ − x₋‖). CLE and QLE experiments drop x₋ but keep t.
/// Throws DegenerateCloud when the cloud has collapsed or redraws run out.
ExperimentSpec pgh(const ParticleCloudd& cloud, const PghConfig& config, RandomStream& rng);

/// One experiment per time, in order.
std::vector<ExperimentSpec> fixed_schedule(const std::vector<double>& times, ExperimentKind kind,
                                           Measurement measurement = Measurement::FullBasis,
                                           const std::optional<ParameterVector>& inversion = std::nullopt);

/// times t_k = scale · base^k for k = 1..count.
std::vector<double> geometric_times(double base, int count, double scale = 1.0);

}  // namespace hamlearn

#endif  // HAMLEARN_DESIGN_HPP
