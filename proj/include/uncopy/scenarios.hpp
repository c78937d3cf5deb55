// Copyright 2026 The uncopy Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "uncopy/machines.hpp"

namespace uncopy {

inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Text, Json };

struct ScenarioConfig {
  Complex alpha{0.7071067811865476, 0.0};  // 1/sqrt(2)
  Complex beta{0.7071067811865476, 0.0};
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  int trials = 100;
  int sigma_index = 0;  // 0 -> Sigma = H, 1 -> Sigma = V
  OutputFormat format = OutputFormat::Text;
};

/// Throws std::invalid_argument unless |alpha|^2+|beta|^2 = 1 within
/// tolerance, trials >= 1, and sigma_index is 0 or 1.
void validate_config(const ScenarioConfig& config);

using MetricValue = std::variant<double, Complex>;

struct ScenarioReport {
  std::string scenario;
  bool passed = false;
  std::string expected;  // one-line claim being checked
  std::vector<std::pair<std::string, MetricValue>> metrics;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
};

struct ScenarioInfo {
  std::string_view name;
  std::string_view summary;
};

/// The eight scenarios in their fixed run and report order.
const std::vector<ScenarioInfo>& scenario_catalog();

/// Runs one named scenario. Throws std::invalid_argument on an unknown name
/// or invalid config.
ScenarioReport run_scenario(std::string_view name, const ScenarioConfig& config);

struct RunOutcome {
  std::vector<ScenarioReport> reports;
  int exit_code = 0;  // 0 iff every verdict is pass, else 1
};

/// Runs every scenario in catalog order. A scenario that throws is converted
/// to a fail verdict carrying an error metric.
RunOutcome run_all(const ScenarioConfig& config);

/// Serializes reports. Json: one object {"tool_version", "config", "reports"}
/// with stable key order and full-precision numbers; text: one aligned line
/// per scenario plus a summary line.
std::string render(const std::vector<ScenarioReport>& reports,
                   const ScenarioConfig& config, OutputFormat format);

}  // namespace uncopy
