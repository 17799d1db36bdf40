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

#ifndef HAMLEARN_DECAY_FIT_HPP
#define HAMLEARN_DECAY_FIT_HPP

#include <cstddef>
#include <vector>

namespace hamlearn {

struct LossPoint {
  double index;
  double loss;
};

/// loss ≈ A·exp(−γ·index) fitted by least squares on ln(loss).
struct DecayFit {
  double amplitude = 0.0;
  double gamma = 0.0;
  double r2 = 0.0;
  /// Half-open range of series positions used by the fit.
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
};

inline constexpr double kDefaultDropFraction = 0.1;

/// Fits after dropping the leading `drop_fraction` of points as transient.
/// Throws InsufficientData with fewer than five usable points or any
/// non-positive loss in the window.
DecayFit fit_decay(const std::vector<LossPoint>& series, double drop_fraction = kDefaultDropFraction);

/// Two independent log-linear segments split at the best break point.
struct TwoSegmentFit {
  DecayFit before;
  DecayFit after;
  /// Position in the series of the first point of the second segment.
  std::size_t break_position = 0;
  double break_index = 0.0;
  double break_loss = 0.0;
  /// r² of the piecewise model and of a single line over the same window.
  double r2 = 0.0;
  double single_r2 = 0.0;
};

TwoSegmentFit fit_two_segment(const std::vector<LossPoint>& series, double drop_fraction = kDefaultDropFraction,
                              std::size_t min_segment = 5);

}  // namespace hamlearn

#endif  // HAMLEARN_DECAY_FIT_HPP
