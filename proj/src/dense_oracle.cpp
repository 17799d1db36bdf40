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

#include "hamlearn/dense_oracle.hpp"

#include <fmt/format.h>

#include <cmath>
#include <complex>

#include "hamlearn/errors.hpp"

namespace hamlearn {

namespace {

using Dense = Eigen::MatrixXcd;

Dense kron(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// ⊗_{k=n−1..0} op_k, so qubit k is bit k of the basis index.
Dense tensor(int qubits, const auto& factor) {
  Dense out = Dense::Identity(1, 1);
  for (int k = qubits - 1; k >= 0; --k) out = kron(out, factor(k));
  return out;
}

Dense hamiltonian(const InteractionGraph& graph, const Eigen::VectorXd& x) {
  Dense z(2, 2);
  z << 1, 0, 0, -1;
  const Dense id = Dense::Identity(2, 2);
  const Eigen::Index dim = Eigen::Index{1} << graph.qubits();
  Dense h = Dense::Zero(dim, dim);
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto [i, j] = graph.edges()[e];
    h += x(static_cast<Eigen::Index>(e)) * tensor(graph.qubits(), [&](int k) { return k == i || k == j ? z : id; });
  }
  return h;
}

}  // namespace

Eigen::VectorXd dense_oracle_distribution(const InteractionGraph& graph, const Eigen::VectorXd& x,
                                          const ExperimentSpec& experiment) {
  if (graph.qubits() > kDenseOracleMaxQubits)
    throw TooManyQubits(fmt::format("dense oracle supports at most {} qubits", kDenseOracleMaxQubits));
  if (x.size() != graph.dimension()) throw DimensionMismatch("dense oracle: parameter count does not match graph");
  experiment.validate(graph.dimension());

  const int n = graph.qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Dense h = hamiltonian(graph, x);
  const Dense h_inv = experiment.kind == ExperimentKind::IQLE ? hamiltonian(graph, *experiment.inversion)
                                                              : Dense::Zero(dim, dim);

  const std::complex<double> i_unit(0.0, 1.0);
  const double t = experiment.time;
  Dense u = Dense::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) u(k, k) = std::exp(i_unit * h_inv(k, k) * t) * std::exp(-i_unit * h(k, k) * t);

  Dense had(2, 2);
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  const Dense hn = tensor(n, [&](int) { return had; });

  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(dim);
  zero(0) = 1.0;
  const Eigen::VectorXcd psi = hn * zero;
  const Eigen::VectorXcd amp = hn * (u * psi);
  Eigen::VectorXd probs = amp.cwiseAbs2();

  if (experiment.measurement == Measurement::TwoOutcome) {
    const std::complex<double> overlap = psi.dot(u * psi);
    Eigen::VectorXd two(2);
    two << std::norm(overlap), 1.0 - std::norm(overlap);
    return two;
  }
  return probs;
}

}  // namespace hamlearn
