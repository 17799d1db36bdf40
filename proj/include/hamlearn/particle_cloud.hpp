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

#ifndef HAMLEARN_PARTICLE_CLOUD_HPP
#define HAMLEARN_PARTICLE_CLOUD_HPP

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <utility>

#include "hamlearn/errors.hpp"

namespace hamlearn {

/// Point in parameter space identifying one hypothesis Hamiltonian.
using ParameterVector = Eigen::VectorXd;

/// Rescale non-negative weights to unit sum. Throws ZeroTotalWeight if they sum to zero.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> normalize_weights(
    const Eigen::MatrixBase<Derived>& weights) {
  using Scalar = typename Derived::Scalar;
  const Scalar total = weights.sum();
  if (!(total > Scalar(0))) throw ZeroTotalWeight();
  return weights / total;
}

/// Weighted set of point hypotheses approximating a posterior distribution.
///
/// Positions are stored column-wise (d × N). Weights always sum to one; the
/// constructor normalizes whatever non-negative weights it is given.
template <typename Scalar_>
class ParticleCloud {
 public:
  using Scalar = Scalar_;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Index = Eigen::Index;

  ParticleCloud(Matrix positions, const Vector& weights) : positions_(std::move(positions)) {
    if (positions_.rows() < 1) throw DimensionMismatch("particle dimension must be at least 1");
    if (positions_.cols() < 1) throw DimensionMismatch("particle cloud must not be empty");
    if (weights.size() != positions_.cols())
      throw DimensionMismatch("expected " + std::to_string(positions_.cols()) + " weights, got " +
                              std::to_string(weights.size()));
    if (!positions_.allFinite()) throw InvalidArgument("particle positions must be finite");
    if ((weights.array() < Scalar(0)).any() || !weights.allFinite())
      throw InvalidArgument("particle weights must be finite and non-negative");
    weights_ = normalize_weights(weights);
  }

  /// Equal weights 1/N.
  static ParticleCloud uniform(Matrix positions) {
    const Index n = positions.cols();
    return ParticleCloud(std::move(positions), Vector::Constant(n, Scalar(1) / Scalar(n)));
  }

  Index size() const noexcept { return positions_.cols(); }
  Index dimension() const noexcept { return positions_.rows(); }

  const Matrix& positions() const noexcept { return positions_; }
  const Vector& weights() const noexcept { return weights_; }

  auto position(Index j) const { return positions_.col(j); }
  Scalar weight(Index j) const { return weights_(j); }

 private:
  Matrix positions_;
  Vector weights_;
};

using ParticleCloudd = ParticleCloud<double>;

}  // namespace hamlearn

#endif  // HAMLEARN_PARTICLE_CLOUD_HPP
