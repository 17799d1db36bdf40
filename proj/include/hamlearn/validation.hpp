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

#ifndef HAMLEARN_VALIDATION_HPP
#define HAMLEARN_VALIDATION_HPP

#include <functional>

#include "hamlearn/graph.hpp"
#include "hamlearn/random.hpp"

namespace hamlearn {

struct OracleComparison {
  int instances = 0;
  double max_abs_error = 0.0;
};

/// Random IQLE instances on `graph`: couplings and inversions uniform in
/// [−1, 1], t uniform in (0, t_max]. Reports the largest elementwise gap
/// between the fast path and the dense matrix oracle.
OracleComparison compare_with_dense_oracle(const InteractionGraph& graph, int instances, double t_max,
                                           RandomStream& rng);

/// Largest gap between the closed-form and quadrature single-parameter
/// posterior means over random priors, inversions and times.
double compare_posterior_mean_forms(int instances, RandomStream& rng);

}  // namespace hamlearn

#endif  // HAMLEARN_VALIDATION_HPP
