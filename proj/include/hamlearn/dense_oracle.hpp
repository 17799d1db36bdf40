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

#ifndef HAMLEARN_DENSE_ORACLE_HPP
#define HAMLEARN_DENSE_ORACLE_HPP

#include <Eigen/Dense>

#include "hamlearn/experiment.hpp"
#include "hamlearn/graph.hpp"

namespace hamlearn {

inline constexpr int kDenseOracleMaxQubits = 6;

/// Brute-force reference for Ising outcome distributions.
///
/// Builds H and H₋ as explicit 2^n × 2^n matrices from Kronecker products of
/// Pauli Z, exponentiates their diagonals, and changes to the X basis by
/// multiplying with the dense Hadamard matrix H^⊗n. Shares no code with the
/// fast path.
Eigen::VectorXd dense_oracle_distribution(const InteractionGraph& graph, const Eigen::VectorXd& x,
                                          const ExperimentSpec& experiment);

}  // namespace hamlearn

#endif  // HAMLEARN_DENSE_ORACLE_HPP
