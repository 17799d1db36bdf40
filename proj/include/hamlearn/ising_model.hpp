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

#ifndef HAMLEARN_ISING_MODEL_HPP
#define HAMLEARN_ISING_MODEL_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

#include "hamlearn/graph.hpp"
#include "hamlearn/likelihood_model.hpp"

namespace hamlearn {

/// Σ_{(i,j)∈G} x_ij s_i s_j with s_k = (−1)^{bit k of z}.
double ising_energy(const InteractionGraph& graph, const ParameterVector& x, std::uint64_t z);

/// Same, with z written as a bit string whose k-th character is qubit k.
double ising_energy(const InteractionGraph& graph, const ParameterVector& x, std::string_view z);

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of two.
void fast_walsh_hadamard(std::span<std::complex<double>> values);

/// Diagonal Ising Hamiltonian H(x) = Σ x_ij Z_i Z_j on an interaction graph,
/// probed from |+⟩^⊗n and measured in the X^⊗n eigenbasis.
///
/// Amplitudes are A(D) = 2^{−n} Σ_z (−1)^{D·z} exp(−i ΔE(z) t) where
/// ΔE = E_x − E_{x₋} for IQLE and E_x otherwise. Only even-parity outcomes
/// are reachable since E(z) = E(z̄).
class IsingModel final : public LikelihoodModel {
 public:
  static constexpr int kDefaultMaxQubits = 14;

  /// Default box is [−½, ½]^d.
  explicit IsingModel(InteractionGraph graph, int max_qubits = kDefaultMaxQubits);
  IsingModel(InteractionGraph graph, ParameterBox box, int max_qubits = kDefaultMaxQubits);

  const InteractionGraph& graph() const noexcept { return graph_; }
  int qubits() const noexcept { return graph_.qubits(); }

  Eigen::Index dimension() const override { return graph_.dimension(); }
  ParameterBox parameter_box() const override { return box_; }
  std::size_t outcome_count(const ExperimentSpec& experiment) const override;

  Eigen::VectorXd outcome_distribution(const ParameterVector& x,
                                       const ExperimentSpec& experiment) const override;
  double likelihood(Datum datum, const ParameterVector& x, const ExperimentSpec& experiment) const override;
  Eigen::VectorXd likelihoods(Datum datum, const Eigen::MatrixXd& positions,
                              const ExperimentSpec& experiment) const override;

  /// E_x(z) for every computational basis string z.
  Eigen::VectorXd energies(const ParameterVector& x) const;

  /// (2^n × d) matrix with entry s_i s_j for basis string z and edge (i,j).
  const Eigen::MatrixXd& spin_products() const noexcept { return spins_; }

 private:
  /// Return probability Pr(D|x_j) for each column, unfloored.
  Eigen::VectorXd outcome_probabilities(std::uint64_t outcome, const Eigen::MatrixXd& positions,
                                        const ExperimentSpec& experiment) const;

  InteractionGraph graph_;
  ParameterBox box_;
  Eigen::MatrixXd spins_;
};

/// Outcome distribution through the phase + Walsh-Hadamard fast path.
Eigen::VectorXd ising_outcome_distribution(const InteractionGraph& graph, const ParameterVector& x,
                                           const ExperimentSpec& experiment,
                                           int max_qubits = IsingModel::kDefaultMaxQubits);

}  // namespace hamlearn

#endif  // HAMLEARN_ISING_MODEL_HPP
