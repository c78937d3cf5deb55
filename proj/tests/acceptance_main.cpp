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
//
// Acceptance suite: one self-contained check per shipped guarantee, one
// PASS/FAIL line each. The optional argv[1] is the path to the CLI binary
// used by the end-to-end check.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "test_support.hpp"
#include "uncopy/scenarios.hpp"

using namespace uncopy;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(3);
  out << value;
  return out.str();
}

// 1. The four C-NOT basis mappings, exact to 1e-12.
void criterion_cnot_truth_table() {
  const Operator gate = cnot();
  double max_error = 0.0;
  for (int control = 0; control < 2; ++control) {
    for (int target = 0; target < 2; ++target) {
      const Ket in = tensor({control ? qubit_v() : qubit_h(),
                             target ? qubit_v() : qubit_h()});
      const Ket expected = tensor({control ? qubit_v() : qubit_h(),
                                   (control ^ target) ? qubit_v() : qubit_h()});
      max_error = std::max(max_error, std::abs(fidelity(apply(gate, in), expected) - 1.0));
    }
  }
  report(1, "C-NOT truth table reproduced exactly", max_error < 1e-12,
         "max |1-fidelity| = " + fmt(max_error));
}

// 2. Feasibility of the deleting constraints is equivalent to ancilla
//    orthogonality, and the Gram residual equals the overlap analytically.
void criterion_orthogonality_necessity() {
  std::mt19937_64 gen(20202);
  int mismatches = 0;
  double max_identity_deviation = 0.0;
  const auto examine = [&](const Ket& a_h, const Ket& a_v) {
    const DeletingMachineSpec spec{qubit_h(), qubit_h(), a_h, a_v, 0};
    const GramReport gram = gram_feasibility(pb_constraints(spec), 1e-10);
    const double overlap = std::abs(inner(a_h, a_v));
    if (gram.feasible != (overlap < 1e-10)) ++mismatches;
    max_identity_deviation =
        std::max(max_identity_deviation, std::abs(gram.max_residual - overlap));
  };
  for (int t = 0; t < 50; ++t) {
    examine(haar_random_ket(2, gen), haar_random_ket(2, gen));
  }
  for (int t = 0; t < 50; ++t) {  // orthogonalized pairs exercise the feasible side
    const Ket a_h = haar_random_ket(2, gen);
    const Ket draw = haar_random_ket(2, gen);
    examine(a_h, normalize(draw - inner(a_h, draw) * a_h));
  }
  report(2, "feasible iff ancilla states orthogonal; residual = overlap",
         mismatches == 0 && max_identity_deviation < 1e-12,
         "mismatches = " + std::to_string(mismatches) +
             ", max |residual-overlap| = " + fmt(max_identity_deviation));
}

// 3. The counter-example machine: orthogonal ancilla states, unitary,
//    constraint-faithful, and provably not a swap (probe fidelity 1/2).
void criterion_counterexample() {
  const DeletingMachine machine = build_counterexample_machine();
  const PartialMapSpec constraints = pb_constraints(machine.spec);

  const double overlap = std::abs(machine.report.ancilla_overlap);
  const UnitaryCheck unitary = is_unitary(machine.unitary, 1e-10);
  double constraint_residual = 0.0;
  for (const auto& [in, out] : constraints.pairs) {
    constraint_residual =
        std::max(constraint_residual, (apply(machine.unitary, in) - out).norm());
  }
  const Operator swap = swap_factors(constraints.shape, 1, 2);
  double fidelity_error = 0.0;
  for (int k = 0; k < 2; ++k) {
    const Ket& probe = constraints.pairs[static_cast<std::size_t>(k)].first;
    const double f = fidelity(apply(machine.unitary, probe), apply(swap, probe));
    fidelity_error = std::max(fidelity_error, std::abs(f - 0.5));
  }

  const bool ok = overlap < 1e-12 && unitary.unitary && constraint_residual < 1e-10 &&
                  !machine.report.is_swap && fidelity_error <= 1e-10;
  report(3, "counter-example: orthogonal ancilla yet not a swap", ok,
         "overlap = " + fmt(overlap) + ", constraint residual = " + fmt(constraint_residual) +
             ", probe |f-1/2| = " + fmt(fidelity_error));
}

// 4. Uncopying holds for every sampled superposition on both machines,
//    reproducibly for a fixed seed.
void criterion_uncopy_soundness() {
  const auto worst_residual = [](const DeletingMachine& machine, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Ket amps = haar_random_ket(2, gen);
      worst = std::max(worst, verify_uncopy(machine.unitary, machine.spec,
                                            amps.amplitude(0), amps.amplitude(1)));
    }
    return worst;
  };
  const DeletingMachine counterexample = build_counterexample_machine();
  const DeletingMachine swap = build_swap_machine();
  const double worst_ce = worst_residual(counterexample, 404);
  const double worst_swap = worst_residual(swap, 404);
  const bool reproducible = worst_residual(counterexample, 404) == worst_ce;

  report(4, "uncopy residual < 1e-9 on 100 sampled superpositions",
         worst_ce < 1e-9 && worst_swap < 1e-9 && reproducible,
         "counter-example worst = " + fmt(worst_ce) + ", swap worst = " + fmt(worst_swap) +
             (reproducible ? ", seed-reproducible" : ", NOT reproducible"));
}

// 5. C-NOT fails on the balanced superposition at exactly 1/2 fidelity and
//    stays perfect when alpha*beta = 0.
void criterion_cnot_superposition() {
  const double inv_sqrt2 = std::sqrt(0.5);
  const CnotTrial copy = cnot_copy_delete_trial(inv_sqrt2, inv_sqrt2, TrialMode::Copy);
  const CnotTrial del = cnot_copy_delete_trial(inv_sqrt2, inv_sqrt2, TrialMode::Delete);
  const double oracle = std::norm(std::pow(inv_sqrt2, 3) + std::pow(inv_sqrt2, 3));

  double basis_error = 0.0;
  for (const auto& [alpha, beta] : std::array<std::pair<double, double>, 2>{
           {{1.0, 0.0}, {0.0, 1.0}}}) {
    basis_error = std::max(
        basis_error,
        std::abs(cnot_copy_delete_trial(alpha, beta, TrialMode::Copy).fidelity - 1.0));
    basis_error = std::max(
        basis_error,
        std::abs(cnot_copy_delete_trial(alpha, beta, TrialMode::Delete).fidelity - 1.0));
  }

  const bool ok = std::abs(copy.fidelity - 0.5) <= 1e-10 &&
                  std::abs(del.fidelity - 0.5) <= 1e-10 &&
                  std::abs(copy.fidelity - oracle) <= 1e-10 && basis_error < 1e-12;
  report(5, "C-NOT superposition failure at fidelity 1/2, basis states exact", ok,
         "copy = " + fmt(copy.fidelity) + ", delete = " + fmt(del.fidelity) +
             ", basis error = " + fmt(basis_error));
}

// 6. MC-NOT with known amplitudes is exact; built for S it underperforms on
//    a different non-orthogonal T.
void criterion_mcnot_known() {
  std::mt19937_64 gen(606);
  double worst_residual = 0.0;
  double worst_roundtrip = 0.0;
  double worst_mismatch = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Ket amps = haar_random_ket(2, gen);
    const Complex alpha = amps.amplitude(0), beta = amps.amplitude(1);
    const Operator copy = mcnot_circuit(alpha, beta, TrialMode::Copy);
    const Operator del = mcnot_circuit(alpha, beta, TrialMode::Delete);
    const Ket s = qubit(alpha, beta);

    worst_residual = std::max(
        worst_residual, (apply(copy, tensor({s, qubit_h()})) - tensor({s, s})).norm());
    worst_residual = std::max(
        worst_residual, (apply(del, tensor({s, s})) - tensor({s, qubit_h()})).norm());
    worst_roundtrip = std::max(
        worst_roundtrip,
        test_support::max_abs(compose(del, copy).matrix() - Matrix::Identity(4, 4)));

    const Ket s_perp = qubit(-std::conj(beta), std::conj(alpha));
    const Ket other = normalize(s + s_perp);
    worst_mismatch = std::max(
        worst_mismatch,
        fidelity(apply(copy, tensor({other, qubit_h()})), tensor({other, other})));
  }
  const bool ok =
      worst_residual < 1e-10 && worst_roundtrip < 1e-10 && worst_mismatch < 1.0 - 1e-6;
  report(6, "MC-NOT exact for known amplitudes, imperfect elsewhere", ok,
         "worst residual = " + fmt(worst_residual) + ", worst roundtrip = " +
             fmt(worst_roundtrip) + ", worst mismatch fidelity = " + fmt(worst_mismatch));
}

// 7. Clonability dichotomy: {H, V} clonable with a verified witness; sampled
//    non-orthogonal pairs are not, and the reported overlap is the sampled one.
void criterion_yuen_dichotomy() {
  const ClonabilityReport orthogonal =
      yuen_clonability({qubit_h(), qubit_v()}, qubit_h(), qubit_h());
  bool witness_ok = orthogonal.clonable && orthogonal.witness.has_value() &&
                    is_unitary(*orthogonal.witness, 1e-10).unitary;
  if (witness_ok) {
    for (const Ket& psi : {qubit_h(), qubit_v()}) {
      const Ket in = tensor({psi, qubit_h(), qubit_h()});
      const Ket out = tensor({psi, psi, qubit_h()});
      witness_ok = witness_ok && (apply(*orthogonal.witness, in) - out).norm() < 1e-10;
    }
  }

  std::mt19937_64 gen(707);
  int misclassified = 0;
  double max_overlap_error = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Ket a = haar_random_ket(2, gen);
    Ket b = haar_random_ket(2, gen);
    double overlap = std::abs(inner(a, b));
    while (overlap < 0.1 || overlap > 0.9) {
      b = haar_random_ket(2, gen);
      overlap = std::abs(inner(a, b));
    }
    const ClonabilityReport pair = yuen_clonability({a, b}, qubit_h(), qubit_h());
    if (pair.clonable) ++misclassified;
    max_overlap_error = std::max(max_overlap_error, std::abs(pair.worst_overlap - overlap));
  }

  report(7, "clonable iff orthogonal, with verified witness",
         witness_ok && misclassified == 0 && max_overlap_error <= 1e-10,
         "misclassified = " + std::to_string(misclassified) +
             ", overlap error = " + fmt(max_overlap_error));
}

// 8. Unitary completion contract on random feasible specs and perturbed
//    infeasible ones.
void criterion_completion_contract() {
  std::mt19937_64 gen(808);
  double worst_constraint = 0.0;
  double worst_unitary = 0.0;
  int wrong_feasible_verdicts = 0;
  int wrong_infeasible_verdicts = 0;

  for (int t = 0; t < 100; ++t) {
    const Eigen::Index dim = std::array<Eigen::Index, 3>{2, 4, 8}[t % 3];
    const Eigen::Index count =
        2 + static_cast<Eigen::Index>(gen() % static_cast<std::uint64_t>(dim - 1));
    const SpaceShape shape = SpaceShape::single(dim);
    const Matrix w = test_support::random_unitary(dim, gen);
    const auto inputs = test_support::random_orthonormal_set(dim, count, gen);

    PartialMapSpec spec{{}, shape};
    for (const Vector& in : inputs) {
      spec.pairs.emplace_back(Ket(in, shape), Ket(w * in, shape));
    }

    try {
      const Operator u = complete_to_unitary(spec, 1e-10);
      worst_unitary = std::max(worst_unitary, is_unitary(u, 1e-10).deviation);
      for (const auto& [in, out] : spec.pairs) {
        worst_constraint = std::max(worst_constraint, (apply(u, in) - out).norm());
      }
    } catch (const std::exception&) {
      ++wrong_feasible_verdicts;
    }

    // Perturb one output; the Gram mismatch must be detected.
    PartialMapSpec perturbed = spec;
    perturbed.pairs[0].second =
        perturbed.pairs[0].second + Complex(0.01, 0.0) * haar_random_ket(dim, gen);
    const GramReport gram = gram_feasibility(perturbed, 1e-10);
    bool detected = !gram.feasible && gram.max_residual > 1e-6;
    try {
      complete_to_unitary(perturbed, 1e-10);
      detected = false;
    } catch (const std::invalid_argument&) {
      // expected
    }
    if (!detected) ++wrong_infeasible_verdicts;
  }

  const bool ok = wrong_feasible_verdicts == 0 && wrong_infeasible_verdicts == 0 &&
                  worst_constraint < 1e-10 && worst_unitary < 1e-10;
  report(8, "unitary completion reproduces feasible specs, rejects perturbed ones", ok,
         "worst constraint = " + fmt(worst_constraint) + ", worst unitarity = " +
             fmt(worst_unitary) + ", bad verdicts = " +
             std::to_string(wrong_feasible_verdicts + wrong_infeasible_verdicts));
}

struct CliResult {
  std::string output;
  int exit_code = -1;
};

CliResult run_cli(const std::string& cli_path, const std::string& args) {
  const std::string command = "'" + cli_path + "' " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

// 9. CLI end-to-end: run all scenarios as JSON, schema-valid, reproducible.
void criterion_cli_end_to_end(const std::string& cli_path) {
  if (cli_path.empty()) {
    report(9, "CLI end-to-end", false, "no CLI path provided");
    return;
  }
  const std::string args = "run all --format json --seed 123 --trials 40";
  const CliResult first = run_cli(cli_path, args);
  const CliResult second = run_cli(cli_path, args);

  bool schema_ok = false;
  bool all_pass = false;
  try {
    const auto parsed = nlohmann::json::parse(first.output);
    schema_ok = parsed.is_object() && parsed.size() == 3 &&
                parsed.contains("tool_version") && parsed["tool_version"].is_string() &&
                parsed.contains("config") && parsed["config"].is_object() &&
                parsed.contains("reports") && parsed["reports"].is_array() &&
                parsed["reports"].size() == 8;
    if (schema_ok) {
      all_pass = true;
      for (const auto& entry : parsed["reports"]) {
        schema_ok = schema_ok && entry.contains("scenario") && entry.contains("verdict") &&
                    entry.contains("expected") && entry.contains("metrics") &&
                    entry.contains("tolerance") && entry.contains("seed");
        all_pass = all_pass && entry["verdict"] == "pass";
      }
    }
  } catch (const std::exception&) {
    schema_ok = false;
  }

  const CliResult misuse = run_cli(cli_path, "run all --format bogus");
  const CliResult unnormalized = run_cli(cli_path, "run all --alpha 0.9 --beta 0.9");

  const bool ok = first.exit_code == 0 && second.exit_code == 0 && schema_ok && all_pass &&
                  first.output == second.output && !first.output.empty() &&
                  misuse.exit_code == 2 && unnormalized.exit_code == 2;
  report(9, "CLI run all --format json: exit 0, schema-valid, byte-identical", ok,
         "exit = " + std::to_string(first.exit_code) +
             (first.output == second.output ? ", reproducible" : ", output differs") +
             ", usage-error exit = " + std::to_string(misuse.exit_code));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";

  criterion_cnot_truth_table();
  criterion_orthogonality_necessity();
  criterion_counterexample();
  criterion_uncopy_soundness();
  criterion_cnot_superposition();
  criterion_mcnot_known();
  criterion_yuen_dichotomy();
  criterion_completion_contract();
  criterion_cli_end_to_end(cli_path);

  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria failed")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
