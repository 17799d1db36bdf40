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

#ifndef HAMLEARN_NOISE_HPP
#define HAMLEARN_NOISE_HPP

#include <Eigen/Dense>

#include "hamlearn/random.hpp"

namespace hamlearn {

/// Symmetric bit-flip channel on a two-outcome likelihood: α + (1 − 2α)p.
double bitflip_wrap(double alpha, double p);

/// Applies bitflip_wrap to both entries of a two-outcome distribution.
Eigen::VectorXd bitflip_distribution(double alpha, const Eigen::VectorXd& distribution);

/// p + N(0, sd²), clipped to [0, 1] and floored at kLikelihoodFloor.
double noisy_likelihood(double p, double sd, RandomStream& rng);

}  // namespace hamlearn

#endif  // HAMLEARN_NOISE_HPP
