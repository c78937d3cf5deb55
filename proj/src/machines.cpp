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

#include "uncopy/machines.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace uncopy {

namespace {

void check_superposition(Complex alpha, Complex beta, const char* what) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kDefaultTolerance) {
    throw std::invalid_argument(std::string(what) + ": |alpha|^2 + |beta|^2 must be 1");
  }
}

void check_machine_spec(const DeletingMachineSpec& spec) {
  if (spec.sigma.dim() != 2 || !spec.sigma.is_normalized()) {
    throw std::invalid_argument("DeletingMachineSpec: sigma must be a normalized qubit state");
  }
  if (!(spec.ancilla_init.shape() == spec.ancilla_h.shape()) ||
      !(spec.ancilla_init.shape() == spec.ancilla_v.shape())) {
    throw std::invalid_argument("DeletingMachineSpec: A, A_H, A_V must share one ancilla shape");
  }
  if (!spec.ancilla_init.is_normalized() || !spec.ancilla_h.is_normalized() ||
      !spec.ancilla_v.is_normalized()) {
    throw std::invalid_argument("DeletingMachineSpec: ancilla states must be normalized");
  }
  if (spec.spectator_count < 0) {
    throw std::invalid_argument("DeletingMachineSpec: spectator_count must be >= 0");
  }
}

// Index of the ancilla's active slot within the composite space
// qubit (x) qubit (x) ancilla factors.
std::size_t active_slot(const DeletingMachineSpec& spec) {
  return 2 + static_cast<std::size_t>(spec.spectator_count);
}

// Worst uncopy residual over the two preferred states plus sampled
// superpositions.
double worst_uncopy_residual(const Operator& machine, const DeletingMachineSpec& spec,
                             int trials, std::uint64_t seed, double tol) {
  double worst = std::max(verify_uncopy(machine, spec, 1.0, 0.0, tol),
                          verify_uncopy(machine, spec, 0.0, 1.0, tol));
  std::mt19937_64 gen(seed);
  for (int t = 0; t < trials; ++t) {
    const Ket psi = haar_random_ket(2, gen);
    worst = std::max(worst,
                     verify_uncopy(machine, spec, psi.amplitude(0), psi.amplitude(1), tol));
  }
  return worst;
}

MachineReport assess_machine(const Operator& machine, const DeletingMachineSpec& spec,
                             int uncopy_trials, std::uint64_t seed, double tol) {
  const PartialMapSpec constraints = pb_constraints(spec);
  const GramReport gram = gram_feasibility(constraints, tol);

  MachineReport report;
  report.feasible = gram.feasible;
  report.gram_residual = gram.max_residual;
  report.ancilla_overlap = inner(spec.ancilla_h, spec.ancilla_v);

  const std::vector<Ket> probes = {constraints.pairs[0].first, constraints.pairs[1].first};
  const SwapCheck swap =
      acts_as_swap_on(machine, constraints.shape, 1, active_slot(spec), probes, tol);
  report.is_swap = swap.matches;
  report.swap_deviation = swap.max_deviation;

  report.uncopy_residual = worst_uncopy_residual(machine, spec, uncopy_trials, seed, tol);
  return report;
}

}  // namespace

PartialMapSpec pb_constraints(const DeletingMachineSpec& spec) {
  check_machine_spec(spec);
  const Ket h = qubit_h();
  const Ket v = qubit_v();
  const Ket& sigma = spec.sigma;

  PartialMapSpec map;
  map.shape = concat(SpaceShape::qubits(2), spec.ancilla_init.shape());
  map.pairs.emplace_back(tensor({h, h, spec.ancilla_init}), tensor({h, sigma, spec.ancilla_h}));
  map.pairs.emplace_back(tensor({v, v, spec.ancilla_init}), tensor({v, sigma, spec.ancilla_v}));
  // The cross term stays unnormalized: norm sqrt(2) on both sides.
  map.pairs.emplace_back(
      tensor({h, v, spec.ancilla_init}) + tensor({v, h, spec.ancilla_init}),
      tensor({h, sigma, spec.ancilla_v}) + tensor({v, sigma, spec.ancilla_h}));
  return map;
}

Ket required_ancilla(Complex alpha, Complex beta, const Ket& ancilla_h, const Ket& ancilla_v) {
  check_superposition(alpha, beta, "required_ancilla");
  if (!(ancilla_h.shape() == ancilla_v.shape())) {
    throw std::invalid_argument("required_ancilla: A_H and A_V shapes differ");
  }
  return alpha * ancilla_h + beta * ancilla_v;
}

double orthogonality_residual(const DeletingMachineSpec& spec) {
  check_machine_spec(spec);
  return std::abs(inner(spec.ancilla_h, spec.ancilla_v));
}

DeletingMachine build_swap_machine(const Ket& sigma, int uncopy_trials, std::uint64_t seed,
                                   double tol) {
  DeletingMachineSpec spec{sigma, sigma, qubit_h(), qubit_v(), 0};
  check_machine_spec(spec);
  Operator machine = swap_factors(SpaceShape::qubits(3), 1, 2);
  MachineReport report = assess_machine(machine, spec, uncopy_trials, seed, tol);
  return {std::move(machine), std::move(spec), report};
}

DeletingMachine build_counterexample_machine(const Ket& sigma, int spectator_count,
                                             int uncopy_trials, std::uint64_t seed,
                                             double tol) {
  if (spectator_count < 0) {
    throw std::invalid_argument("build_counterexample_machine: spectator_count must be >= 0");
  }
  const Ket plus = normalize(qubit_h() + qubit_v());
  const Ket minus = normalize(qubit_h() - qubit_v());

  std::vector<Ket> init_parts, h_parts, v_parts;
  for (int s = 0; s < spectator_count; ++s) {
    init_parts.push_back(qubit_h());
    h_parts.push_back(qubit_h());
    v_parts.push_back(qubit_h());
  }
  init_parts.push_back(sigma);
  h_parts.push_back(plus);
  v_parts.push_back(minus);

  DeletingMachineSpec spec{sigma, tensor(init_parts), tensor(h_parts), tensor(v_parts),
                           spectator_count};
  check_machine_spec(spec);
  Operator machine = complete_to_unitary(pb_constraints(spec), tol);
  MachineReport report = assess_machine(machine, spec, uncopy_trials, seed, tol);
  return {std::move(machine), std::move(spec), report};
}

double verify_uncopy(const Operator& machine, const DeletingMachineSpec& spec, Complex alpha,
                     Complex beta, double tol) {
  check_machine_spec(spec);
  check_superposition(alpha, beta, "verify_uncopy");
  (void)tol;  // certification threshold; the residual itself is returned

  const Ket psi = qubit(alpha, beta);
  const Ket input = tensor({psi, psi, spec.ancilla_init});
  if (machine.dim() != input.dim()) {
    throw std::invalid_argument(
        "verify_uncopy: machine dimension does not match the composite space");
  }
  const Ket target =
      tensor({psi, spec.sigma, required_ancilla(alpha, beta, spec.ancilla_h, spec.ancilla_v)});
  return (machine.matrix() * input.amplitudes() - target.amplitudes()).norm();
}

CnotTrial cnot_copy_delete_trial(Complex alpha, Complex beta, TrialMode mode) {
  check_superposition(alpha, beta, "cnot_copy_delete_trial");
  const Ket s = qubit(alpha, beta);
  const Ket blank = qubit_h();
  const Operator gate = cnot();

  Ket input = mode == TrialMode::Copy ? tensor({s, blank}) : tensor({s, s});
  Ket target = mode == TrialMode::Copy ? tensor({s, s}) : tensor({s, blank});
  Ket actual = apply(gate, input);
  const double fid = fidelity(actual, target);
  return {std::move(actual), std::move(target), fid};
}

Operator mcnot_circuit(Complex alpha, Complex beta, TrialMode mode) {
  const Operator rot = rotation_to_basis(alpha, beta, 1);
  const Operator rot_dag = adjoint(rot);
  const Operator eye = identity_op(SpaceShape::qubits(1));
  if (mode == TrialMode::Copy) {
    return compose(tensor_op({rot_dag, rot_dag}), compose(cnot(), tensor_op({rot, eye})));
  }
  return compose(tensor_op({rot_dag, eye}), compose(cnot(), tensor_op({rot, rot})));
}

ClonabilityReport yuen_clonability(const std::vector<Ket>& states, const Ket& sigma,
                                   const Ket& ancilla_init, double tol) {
  if (states.empty()) {
    throw std::invalid_argument("yuen_clonability: empty state list");
  }
  if (sigma.dim() != 2 || !sigma.is_normalized()) {
    throw std::invalid_argument("yuen_clonability: sigma must be a normalized qubit state");
  }
  if (!ancilla_init.is_normalized()) {
    throw std::invalid_argument("yuen_clonability: ancilla state must be normalized");
  }
  for (const Ket& state : states) {
    if (state.dim() != 2 || !state.is_normalized()) {
      throw std::invalid_argument("yuen_clonability: states must be normalized qubit kets");
    }
  }

  // Drop states identical up to phase.
  std::vector<Ket> distinct;
  for (const Ket& state : states) {
    bool duplicate = false;
    for (const Ket& rep : distinct) {
      if (std::abs(inner(rep, state)) > kDedupThreshold) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) distinct.push_back(state);
  }

  ClonabilityReport report;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      report.worst_overlap = std::max(report.worst_overlap,
                                      std::abs(inner(distinct[i], distinct[j])));
    }
  }
  report.clonable = report.worst_overlap < tol;

  if (report.clonable) {
    PartialMapSpec map;
    map.shape = concat(SpaceShape::qubits(2), ancilla_init.shape());
    for (const Ket& psi : distinct) {
      map.pairs.emplace_back(tensor({psi, sigma, ancilla_init}),
                             tensor({psi, psi, ancilla_init}));
    }
    report.witness = complete_to_unitary(map, tol);
  }
  return report;
}

}  // namespace uncopy
