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

#ifndef HAMLEARN_EXPERIMENT_HPP
#define HAMLEARN_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hamlearn/particle_cloud.hpp"

namespace hamlearn {

/// CLE: likelihood computed classically. QLE: estimated from a trusted
/// simulator. IQLE: evolution followed by inversion under a guessed
/// Hamiltonian (Loschmidt echo).
enum class ExperimentKind { CLE, QLE, IQLE };

/// FullBasis measures every X^⊗n string. TwoOutcome measures the POVM
/// {|ψ⟩⟨ψ|, 1 − |ψ⟩⟨ψ|}.
enum class Measurement { FullBasis, TwoOutcome };

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::IQLE;
  double time = 1.0;
  std::optional<ParameterVector> inversion;
  Measurement measurement = Measurement::FullBasis;

  /// Throws InvalidArgument/DimensionMismatch unless t > 0 is finite and the
  /// inversion is present (with `dimension` entries) exactly for IQLE.
  void validate(Eigen::Index dimension) const;
};

/// Measurement outcome index. For TwoOutcome, 0 is "returned to |ψ⟩".
struct Datum {
  std::uint64_t outcome = 0;
  friend bool operator==(const Datum&, const Datum&) = default;
};

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(Measurement measurement);
ExperimentKind parse_experiment_kind(std::string_view text);
Measurement parse_measurement(std::string_view text);

}  // namespace hamlearn

#endif  // HAMLEARN_EXPERIMENT_HPP
