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

#include <complex>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "uncopy/scenarios.hpp"

namespace {

constexpr int kUsageError = 2;

// Accepts "RE", "RE,IM", and "RE+IMi" / "RE-IMi" complex literals.
std::optional<uncopy::Complex> parse_complex(const std::string& text) {
  const auto to_double = [](const std::string& s) -> std::optional<double> {
    try {
      std::size_t used = 0;
      const double value = std::stod(s, &used);
      if (used != s.size()) return std::nullopt;
      return value;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };

  if (const auto comma = text.find(','); comma != std::string::npos) {
    const auto re = to_double(text.substr(0, comma));
    const auto im = to_double(text.substr(comma + 1));
    if (!re || !im) return std::nullopt;
    return uncopy::Complex(*re, *im);
  }

  if (!text.empty() && (text.back() == 'i' || text.back() == 'I')) {
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the sign of the imaginary part (skipping a leading sign and
    // exponent signs).
    for (std::size_t pos = body.size(); pos-- > 1;) {
      const char c = body[pos];
      if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
        const auto re = to_double(body.substr(0, pos));
        const std::string imag_text = (pos + 1 == body.size())
                                          ? std::string(1, c) + "1"
                                          : body.substr(pos, body.size() - pos);
        const auto im = to_double(imag_text);
        if (!re || !im) return std::nullopt;
        return uncopy::Complex(*re, *im);
      }
    }
    const auto im = to_double(body.empty() ? "1" : body);
    if (!im) return std::nullopt;
    return uncopy::Complex(0.0, *im);
  }

  const auto re = to_double(text);
  if (!re) return std::nullopt;
  return uncopy::Complex(*re, 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scenario runner for quantum copy/delete feasibility arguments"};
  app.require_subcommand(1);

  std::string target;
  std::string alpha_text, beta_text;
  std::string format_text = "text";
  uncopy::ScenarioConfig config;

  CLI::App* run = app.add_subcommand("run", "Run one named scenario, or all of them");
  run->add_option("scenario", target, "Scenario name or 'all'")->required();
  run->add_option("--alpha", alpha_text, "Amplitude of H: RE, RE,IM or RE+IMi");
  run->add_option("--beta", beta_text, "Amplitude of V: RE, RE,IM or RE+IMi");
  run->add_option("--tolerance", config.tolerance, "Comparison tolerance");
  run->add_option("--seed", config.seed, "Random seed recorded in every report");
  run->add_option("--trials", config.trials, "Sample count for randomized checks");
  run->add_option("--sigma", config.sigma_index, "Blank state: 0 for H, 1 for V");
  run->add_option("--format", format_text, "Output format: text or json");

  CLI::App* list = app.add_subcommand("list", "List scenarios with one-line descriptions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kUsageError;
  }

  if (list->parsed()) {
    std::size_t width = 0;
    for (const auto& info : uncopy::scenario_catalog()) {
      width = std::max(width, info.name.size());
    }
    for (const auto& info : uncopy::scenario_catalog()) {
      std::cout << info.name << std::string(width - info.name.size() + 2, ' ') << info.summary
                << "\n";
    }
    return 0;
  }

  if (!alpha_text.empty()) {
    const auto alpha = parse_complex(alpha_text);
    if (!alpha) {
      std::cerr << "invalid --alpha value: " << alpha_text << "\n";
      return kUsageError;
    }
    config.alpha = *alpha;
  }
  if (!beta_text.empty()) {
    const auto beta = parse_complex(beta_text);
    if (!beta) {
      std::cerr << "invalid --beta value: " << beta_text << "\n";
      return kUsageError;
    }
    config.beta = *beta;
  }
  if (format_text == "json") {
    config.format = uncopy::OutputFormat::Json;
  } else if (format_text != "text") {
    std::cerr << "invalid --format value: " << format_text << " (expected text or json)\n";
    return kUsageError;
  }

  try {
    uncopy::validate_config(config);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }

  if (target == "all") {
    const uncopy::RunOutcome outcome = uncopy::run_all(config);
    std::cout << uncopy::render(outcome.reports, config, config.format);
    return outcome.exit_code;
  }

  try {
    const uncopy::ScenarioReport report = uncopy::run_scenario(target, config);
    std::cout << uncopy::render({report}, config, config.format);
    return report.passed ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "known scenarios:";
    for (const auto& info : uncopy::scenario_catalog()) std::cerr << " " << info.name;
    std::cerr << " all\n";
    return kUsageError;
  }
}
