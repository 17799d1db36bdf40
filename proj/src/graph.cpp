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

#include "hamlearn/graph.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "hamlearn/errors.hpp"

namespace hamlearn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument(fmt::format("graph: '{}' is not an integer", s));
  return value;
}

}  // namespace

InteractionGraph::InteractionGraph(int qubits, std::vector<Edge> edges) : qubits_(qubits) {
  if (qubits < 2) throw InvalidArgument("graph: need at least two qubits");
  std::set<Edge> seen;
  for (auto [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i == j) throw InvalidArgument(fmt::format("graph: self loop on qubit {}", i));
    if (i < 0 || j >= qubits) throw InvalidArgument(fmt::format("graph: edge {}-{} out of range", i, j));
    if (!seen.emplace(i, j).second) throw InvalidArgument(fmt::format("graph: duplicate edge {}-{}", i, j));
    edges_.emplace_back(i, j);
  }
  if (edges_.empty()) throw InvalidArgument("graph: need at least one edge");
}

InteractionGraph InteractionGraph::complete(int qubits) {
  std::vector<Edge> edges;
  for (int i = 0; i < qubits; ++i)
    for (int j = i + 1; j < qubits; ++j) edges.emplace_back(i, j);
  return {qubits, std::move(edges)};
}

InteractionGraph InteractionGraph::line(int qubits) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < qubits; ++i) edges.emplace_back(i, i + 1);
  return {qubits, std::move(edges)};
}

InteractionGraph InteractionGraph::parse(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw InvalidArgument(fmt::format("graph: cannot parse '{}'", text));
  const auto family = trim(text.substr(0, open));
  const auto body = text.substr(open + 1, text.size() - open - 2);
  if (family == "complete") return complete(parse_int(body));
  if (family == "line") return line(parse_int(body));
  if (family == "edges") {
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw InvalidArgument("graph: edges(...) needs 'n: i-j, ...'");
    const int n = parse_int(body.substr(0, colon));
    std::vector<Edge> edges;
    auto rest = body.substr(colon + 1);
    while (!trim(rest).empty()) {
      const auto comma = rest.find(',');
      const auto item = trim(rest.substr(0, comma));
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) throw InvalidArgument(fmt::format("graph: bad edge '{}'", item));
      edges.emplace_back(parse_int(item.substr(0, dash)), parse_int(item.substr(dash + 1)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return {n, std::move(edges)};
  }
  throw InvalidArgument(fmt::format("graph: unknown family '{}'", family));
}

std::string InteractionGraph::to_string() const {
  if (*this == complete(qubits_)) return fmt::format("complete({})", qubits_);
  if (*this == line(qubits_)) return fmt::format("line({})", qubits_);
  std::string out = fmt::format("edges({}:", qubits_);
  for (std::size_t k = 0; k < edges_.size(); ++k)
    out += fmt::format("{} {}-{}", k ? "," : "", edges_[k].first, edges_[k].second);
  return out + ")";
}

}  // namespace hamlearn
