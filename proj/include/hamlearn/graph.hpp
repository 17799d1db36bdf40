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

#ifndef HAMLEARN_GRAPH_HPP
#define HAMLEARN_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamlearn {

/// Qubit interaction graph; one coupling parameter per edge.
class InteractionGraph {
 public:
  using Edge = std::pair<int, int>;

  /// Edges are normalized to i < j; duplicates, self loops and out-of-range
  /// endpoints are rejected.
  InteractionGraph(int qubits, std::vector<Edge> edges);

  static InteractionGraph complete(int qubits);
  static InteractionGraph line(int qubits);

  /// Parses `complete(n)`, `line(n)` or `edges(n: i-j, k-l, ...)`.
  static InteractionGraph parse(std::string_view text);

  int qubits() const noexcept { return qubits_; }
  int dimension() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Inverse of parse(); named families round-trip to their short form.
  std::string to_string() const;

  friend bool operator==(const InteractionGraph&, const InteractionGraph&) = default;

 private:
  int qubits_;
  std::vector<Edge> edges_;
};

}  // namespace hamlearn

#endif  // HAMLEARN_GRAPH_HPP
