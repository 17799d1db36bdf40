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

#include "hamlearn/results_io.hpp"

#include <Eigen/Core>
#include <boost/version.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hamlearn/errors.hpp"

namespace hamlearn {

namespace {

constexpr const char* kVersion = "0.1.0";

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(fmt::format("cannot open {} for writing", path.string()));
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& text, int line, const char* field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw SchemaError(line, field, fmt::format("not a number: '{}'", text));
  }
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

void write_trajectories(std::ostream& out, const std::vector<TrialResult>& trials) {
  for (std::size_t trial = 0; trial < trials.size(); ++trial) {
    for (const auto& r : trials[trial].trajectory.records) {
      fmt::print(out,
                 "{{\"trial\":{},\"experiment_index\":{},\"loss\":{},\"ess\":{},\"resampled\":{},\"time\":{},"
                 "\"simulator_calls\":{},\"wall_clock\":{},\"update_skipped\":{}}}\n",
                 trial, r.experiment_index, format_number(r.loss), format_number(r.ess), r.resampled,
                 format_number(r.time), r.simulator_calls, format_number(r.wall_clock), r.update_skipped);
    }
  }
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "experiment_index,p25,p50,p75\n";
  for (const auto& r : rows)
    fmt::print(out, "{},{},{},{}\n", r.experiment_index, format_number(r.p25), format_number(r.p50),
               format_number(r.p75));
}

void write_fits(std::ostream& out, const std::vector<TrialResult>& trials) {
  out << "trial,A,gamma,r2\n";
  for (std::size_t trial = 0; trial < trials.size(); ++trial) {
    const auto& fit = trials[trial].fit;
    if (fit)
      fmt::print(out, "{},{},{},{}\n", trial, format_number(fit->amplitude), format_number(fit->gamma),
                 format_number(fit->r2));
    else
      fmt::print(out, "{},,,\n", trial);
  }
}

std::string library_version() { return kVersion; }

void write_meta(std::ostream& out, const RunConfig& config, const std::string& command) {
  nlohmann::ordered_json meta;
  meta["command"] = command;
  meta["seed"] = config.seed;
  meta["versions"] = {
      {"hamlearn", kVersion},
      {"eigen", fmt::format("{}.{}.{}", EIGEN_WORLD_VERSION, EIGEN_MAJOR_VERSION, EIGEN_MINOR_VERSION)},
      {"boost", fmt::format("{}.{}.{}", BOOST_VERSION / 100000, BOOST_VERSION / 100 % 1000, BOOST_VERSION % 100)},
      {"compiler", __VERSION__},
  };
  // Config echo keeps the emitted text values so numbers retain 17 digits.
  nlohmann::ordered_json echo = nlohmann::ordered_json::object();
  std::istringstream lines(emit_config(config));
  std::string line;
  while (std::getline(lines, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    echo[line.substr(0, eq)] = line.substr(eq + 3);
  }
  meta["config"] = echo;
  meta["config_text"] = emit_config(config);
  out << meta.dump(2) << '\n';
}

void write_risk(std::ostream& out, const std::vector<RiskPoint>& points) {
  out << "x_inv,t,alpha,risk,stderr\n";
  for (const auto& p : points)
    fmt::print(out, "{},{},{},{},{}\n", format_number(p.x_inv), format_number(p.t), format_number(p.alpha),
               format_number(p.risk), format_number(p.stderr_));
}

std::vector<SummaryRow> read_summary(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError(1, "header", "empty summary file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "experiment_index,p25,p50,p75") throw SchemaError(1, "header", "unexpected summary header");
  std::vector<SummaryRow> rows;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 4) throw SchemaError(number, "row", "expected 4 columns");
    SummaryRow r;
    r.experiment_index = static_cast<int>(parse_double(cells[0], number, "experiment_index"));
    r.p25 = parse_double(cells[1], number, "p25");
    r.p50 = parse_double(cells[2], number, "p50");
    r.p75 = parse_double(cells[3], number, "p75");
    rows.push_back(r);
  }
  return rows;
}

void write_run(const std::filesystem::path& dir, const EnsembleResult& result, const RunConfig& config,
               const std::string& command) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_output(dir / "trajectories.jsonl");
    write_trajectories(out, result.trials);
  }
  {
    auto out = open_output(dir / "summary.csv");
    write_summary(out, result.summary);
  }
  {
    auto out = open_output(dir / "fits.csv");
    write_fits(out, result.trials);
  }
  {
    auto out = open_output(dir / "meta.json");
    write_meta(out, config, command);
  }
}

}  // namespace hamlearn
