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

#ifndef HAMLEARN_RANDOM_HPP
#define HAMLEARN_RANDOM_HPP

#include <cstdint>
#include <random>

namespace hamlearn {

/// Seeded pseudo-random stream. Child streams are derived deterministically
/// from (seed, index) so parallel work can be split without sharing state.
class RandomStream {
 public:
  using engine_type = std::mt19937_64;
  using result_type = engine_type::result_type;

  explicit RandomStream(std::uint64_t seed = 0) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Independent stream for sub-task `index`; does not advance this stream.
  RandomStream split(std::uint64_t index) const {
    return RandomStream(mix(seed_ ^ mix(index + 0x632be59bd9b4e019ULL)));
  }

  static constexpr result_type min() { return engine_type::min(); }
  static constexpr result_type max() { return engine_type::max(); }
  result_type operator()() { return engine_(); }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  engine_type& engine() noexcept { return engine_; }

 private:
  // SplitMix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  engine_type engine_;
};

}  // namespace hamlearn

#endif  // HAMLEARN_RANDOM_HPP
