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

#include "hamlearn/noise.hpp"

#include <algorithm>

#include "hamlearn/errors.hpp"
#include "hamlearn/likelihood_model.hpp"

namespace hamlearn {

double bitflip_wrap(double alpha, double p) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw InvalidArgument("bit-flip rate must lie in [0, 0.5]");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("probability must lie in [0, 1]");
  return alpha + (1.0 - 2.0 * alpha) * p;
}

Eigen::VectorXd bitflip_distribution(double alpha, const Eigen::VectorXd& distribution) {
  if (distribution.size() != 2) throw InvalidArgument("bit-flip noise needs a two-outcome distribution");
  Eigen::VectorXd out(2);
  out << bitflip_wrap(alpha, distribution(0)), bitflip_wrap(alpha, distribution(1));
  return out;
}

double noisy_likelihood(double p, double sd, RandomStream& rng) {
  if (!(sd >= 0.0)) throw InvalidArgument("noise standard deviation must be non-negative");
  const double noisy = sd > 0.0 ? p + sd * rng.normal() : p;
  return std::max(std::clamp(noisy, 0.0, 1.0), kLikelihoodFloor);
}

}  // namespace hamlearn
