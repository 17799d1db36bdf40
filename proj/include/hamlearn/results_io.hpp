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

#ifndef HAMLEARN_RESULTS_IO_HPP
#define HAMLEARN_RESULTS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hamlearn/risk.hpp"
#include "hamlearn/trial.hpp"

namespace hamlearn {

/// Shortest form is not used: every number is printed with 17 significant digits.
std::string format_number(double value);

void write_trajectories(std::ostream& out, const std::vector<TrialResult>& trials);
void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows);
/// Trials without a fit are written with empty A, gamma and r2 fields.
void write_fits(std::ostream& out, const std::vector<TrialResult>& trials);
void write_meta(std::ostream& out, const RunConfig& config, const std::string& command);
void write_risk(std::ostream& out, const std::vector<RiskPoint>& points);

std::vector<SummaryRow> read_summary(std::istream& in);

/// Writes trajectories.jsonl, summary.csv, fits.csv and meta.json into `dir`.
void write_run(const std::filesystem::path& dir, const EnsembleResult& result, const RunConfig& config,
               const std::string& command);

std::string library_version();

}  // namespace hamlearn

#endif  // HAMLEARN_RESULTS_IO_HPP
