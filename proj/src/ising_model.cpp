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

#include "hamlearn/ising_model.hpp"

#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "hamlearn/errors.hpp"

namespace hamlearn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Eigen::Index kChunk = 256;

double reduced_phase(double energy, double t) { return std::fmod(energy * t, kTwoPi); }

void check_parameters(const InteractionGraph& graph, const ParameterVector& x) {
  if (x.size() != graph.dimension())
    throw DimensionMismatch(
        fmt::format("graph has {} edges but {} parameters were given", graph.dimension(), x.size()));
}

}  // namespace

double ising_energy(const InteractionGraph& graph, const ParameterVector& x, std::uint64_t z) {
  check_parameters(graph, x);
  double energy = 0.0;
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto [i, j] = graph.edges()[e];
    const bool anti = ((z >> i) ^ (z >> j)) & 1U;
    energy += anti ? -x(static_cast<Eigen::Index>(e)) : x(static_cast<Eigen::Index>(e));
  }
  return energy;
}

double ising_energy(const InteractionGraph& graph, const ParameterVector& x, std::string_view z) {
  if (z.size() != static_cast<std::size_t>(graph.qubits()))
    throw DimensionMismatch(fmt::format("bit string has {} qubits, graph has {}", z.size(), graph.qubits()));
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] != '0' && z[k] != '1') throw InvalidArgument(fmt::format("bad bit string '{}'", z));
    if (z[k] == '1') bits |= std::uint64_t{1} << k;
  }
  return ising_energy(graph, x, bits);
}

void fast_walsh_hadamard(std::span<std::complex<double>> values) {
  const std::size_t n = values.size();
  if (!std::has_single_bit(n)) throw InvalidArgument("Walsh-Hadamard transform needs a power-of-two length");
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += half << 1) {
      for (std::size_t k = block; k < block + half; ++k) {
        const auto u = values[k];
        const auto v = values[k + half];
        values[k] = u + v;
        values[k + half] = u - v;
      }
    }
  }
}

IsingModel::IsingModel(InteractionGraph graph, int max_qubits)
    : IsingModel(graph, ParameterBox::cube(graph.dimension(), -0.5, 0.5), max_qubits) {}

IsingModel::IsingModel(InteractionGraph graph, ParameterBox box, int max_qubits)
    : graph_(std::move(graph)), box_(std::move(box)) {
  if (graph_.qubits() > max_qubits)
    throw TooManyQubits(fmt::format("{} qubits exceeds the cap of {}", graph_.qubits(), max_qubits));
  if (box_.dimension() != graph_.dimension() || box_.upper.size() != graph_.dimension())
    throw DimensionMismatch("parameter box dimension does not match the graph");
  const Eigen::Index states = Eigen::Index{1} << graph_.qubits();
  spins_.resize(states, graph_.dimension());
  for (Eigen::Index z = 0; z < states; ++z)
    for (Eigen::Index e = 0; e < graph_.dimension(); ++e) {
      const auto [i, j] = graph_.edges()[static_cast<std::size_t>(e)];
      spins_(z, e) = ((z >> i) ^ (z >> j)) & 1 ? -1.0 : 1.0;
    }
}

std::size_t IsingModel::outcome_count(const ExperimentSpec& experiment) const {
  return experiment.measurement == Measurement::TwoOutcome ? 2 : std::size_t{1} << graph_.qubits();
}

Eigen::VectorXd IsingModel::energies(const ParameterVector& x) const {
  check_parameters(graph_, x);
  return spins_ * x;
}

Eigen::VectorXd IsingModel::outcome_distribution(const ParameterVector& x,
                                                 const ExperimentSpec& experiment) const {
  validate(experiment);
  check_parameters(graph_, x);
  ParameterVector delta = x;
  if (experiment.kind == ExperimentKind::IQLE) delta -= *experiment.inversion;
  const Eigen::VectorXd energy = spins_ * delta;

  std::vector<std::complex<double>> amp(static_cast<std::size_t>(energy.size()));
  for (Eigen::Index z = 0; z < energy.size(); ++z)
    amp[static_cast<std::size_t>(z)] = std::polar(1.0, -reduced_phase(energy(z), experiment.time));
  fast_walsh_hadamard(amp);

  const double scale = std::ldexp(1.0, -2 * graph_.qubits());
  Eigen::VectorXd probs(energy.size());
  for (Eigen::Index d = 0; d < probs.size(); ++d) probs(d) = std::norm(amp[static_cast<std::size_t>(d)]) * scale;

  if (experiment.measurement == Measurement::TwoOutcome) {
    Eigen::VectorXd two(2);
    two << probs(0), std::max(0.0, 1.0 - probs(0));
    return two;
  }
  return probs;
}

Eigen::VectorXd IsingModel::outcome_probabilities(std::uint64_t outcome, const Eigen::MatrixXd& positions,
                                                  const ExperimentSpec& experiment) const {
  const Eigen::Index count = positions.cols();
  if (std::popcount(outcome) % 2 == 1) return Eigen::VectorXd::Zero(count);

  // Pairing z with its complement halves the sum: A(D) = 2^{1−n} Σ_{z < 2^{n−1}}.
  const Eigen::Index half = spins_.rows() / 2;
  Eigen::ArrayXd sign(half);
  for (Eigen::Index z = 0; z < half; ++z)
    sign(z) = std::popcount(outcome & static_cast<std::uint64_t>(z)) % 2 ? -1.0 : 1.0;

  Eigen::VectorXd out(count);
  Eigen::MatrixXd delta;
  Eigen::MatrixXd energy;
  const double norm = 1.0 / (static_cast<double>(half) * static_cast<double>(half));
  for (Eigen::Index first = 0; first < count; first += kChunk) {
    const Eigen::Index cols = std::min(kChunk, count - first);
    delta = positions.middleCols(first, cols);
    if (experiment.kind == ExperimentKind::IQLE) delta.colwise() -= *experiment.inversion;
    energy.noalias() = spins_.topRows(half) * delta;
    for (Eigen::Index c = 0; c < cols; ++c) {
      double re = 0.0;
      double im = 0.0;
      for (Eigen::Index z = 0; z < half; ++z) {
        const double phase = reduced_phase(energy(z, c), experiment.time);
        re += sign(z) * std::cos(phase);
        im += sign(z) * std::sin(phase);
      }
      out(first + c) = (re * re + im * im) * norm;
    }
  }
  return out;
}

double IsingModel::likelihood(Datum datum, const ParameterVector& x, const ExperimentSpec& experiment) const {
  check_parameters(graph_, x);
  return likelihoods(datum, x, experiment)(0);
}

Eigen::VectorXd IsingModel::likelihoods(Datum datum, const Eigen::MatrixXd& positions,
                                        const ExperimentSpec& experiment) const {
  validate(datum, experiment);
  if (positions.rows() != graph_.dimension())
    throw DimensionMismatch(fmt::format("positions have {} rows, model has {} parameters", positions.rows(),
                                        graph_.dimension()));
  if (experiment.measurement == Measurement::TwoOutcome) {
    Eigen::VectorXd p = outcome_probabilities(0, positions, experiment);
    if (datum.outcome == 1) p = (1.0 - p.array()).cwiseMax(0.0);
    return p.cwiseMax(kLikelihoodFloor);
  }
  return outcome_probabilities(datum.outcome, positions, experiment).cwiseMax(kLikelihoodFloor);
}

Eigen::VectorXd ising_outcome_distribution(const InteractionGraph& graph, const ParameterVector& x,
                                           const ExperimentSpec& experiment, int max_qubits) {
  return IsingModel(graph, max_qubits).outcome_distribution(x, experiment);
}

}  // namespace hamlearn
