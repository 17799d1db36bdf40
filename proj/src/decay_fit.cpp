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

#include "hamlearn/decay_fit.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>

#include "hamlearn/errors.hpp"

namespace hamlearn {

namespace {

constexpr std::size_t kMinPoints = 5;

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double sse = 0.0;
  double sst = 0.0;
};

// Least squares of ln(loss) on index over [begin, end).
LineFit fit_line(const std::vector<LossPoint>& s, std::size_t begin, std::size_t end) {
  const double n = static_cast<double>(end - begin);
  double mx = 0.0, my = 0.0;
  for (std::size_t k = begin; k < end; ++k) {
    mx += s[k].index;
    my += std::log(s[k].loss);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k = begin; k < end; ++k) {
    const double dx = s[k].index - mx;
    const double dy = std::log(s[k].loss) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LineFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  fit.sst = syy;
  fit.sse = std::max(0.0, syy - fit.slope * sxy);
  return fit;
}

double r_squared(double sse, double sst) {
  if (sst <= 0.0) return sse <= 0.0 ? 1.0 : 0.0;
  return 1.0 - sse / sst;
}

DecayFit to_decay(const LineFit& line, std::size_t begin, std::size_t end) {
  return {std::exp(line.intercept), -line.slope, r_squared(line.sse, line.sst), begin, end};
}

std::size_t window_start(const std::vector<LossPoint>& series, double drop_fraction) {
  if (!(drop_fraction >= 0.0 && drop_fraction < 1.0))
    throw InvalidArgument("decay fit: drop fraction must lie in [0, 1)");
  const auto begin = static_cast<std::size_t>(std::floor(drop_fraction * static_cast<double>(series.size())));
  for (std::size_t k = begin; k < series.size(); ++k)
    if (!(series[k].loss > 0.0) || !std::isfinite(series[k].loss))
      throw InsufficientData(fmt::format("decay fit: loss at index {} is not positive", series[k].index));
  return begin;
}

}  // namespace

DecayFit fit_decay(const std::vector<LossPoint>& series, double drop_fraction) {
  const std::size_t begin = window_start(series, drop_fraction);
  if (series.size() - begin < kMinPoints)
    throw InsufficientData(fmt::format("decay fit needs at least {} points, window has {}", kMinPoints,
                                       series.size() - begin));
  return to_decay(fit_line(series, begin, series.size()), begin, series.size());
}

TwoSegmentFit fit_two_segment(const std::vector<LossPoint>& series, double drop_fraction, std::size_t min_segment) {
  min_segment = std::max(min_segment, kMinPoints);
  const std::size_t begin = window_start(series, drop_fraction);
  const std::size_t end = series.size();
  if (end - begin < 2 * min_segment)
    throw InsufficientData(fmt::format("two-segment fit needs at least {} points", 2 * min_segment));

  const LineFit whole = fit_line(series, begin, end);
  TwoSegmentFit best;
  double best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t cut = begin + min_segment; cut + min_segment <= end; ++cut) {
    const LineFit a = fit_line(series, begin, cut);
    const LineFit b = fit_line(series, cut, end);
    if (a.sse + b.sse < best_sse) {
      best_sse = a.sse + b.sse;
      best.before = to_decay(a, begin, cut);
      best.after = to_decay(b, cut, end);
      best.break_position = cut;
    }
  }
  best.break_index = series[best.break_position].index;
  best.break_loss = series[best.break_position].loss;
  best.r2 = r_squared(best_sse, whole.sst);
  best.single_r2 = r_squared(whole.sse, whole.sst);
  return best;
}

}  // namespace hamlearn
