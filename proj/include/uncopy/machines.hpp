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
#include <optional>
#include <vector>

#include "uncopy/operators.hpp"

namespace uncopy {

/// Two states count as the same state when their overlap exceeds this.
inline constexpr double kDedupThreshold = 1.0 - 1e-10;

/// Data defining a two-copy deleting machine on qubit (x) qubit (x) ancilla:
/// the prescribed blank state Sigma, the ancilla's initial state A, and the
/// ancilla states A_H, A_V it is driven to when deleting the preferred
/// states. spectator_count records how many leading ancilla qubits are inert
/// bystanders (they tensor-factor out of every inner product); the active
/// slot is the last ancilla factor.
struct DeletingMachineSpec {
  Ket sigma;         // qubit blank state, normalized
  Ket ancilla_init;  // A
  Ket ancilla_h;     // A_H
  Ket ancilla_v;     // A_V
  int spectator_count = 0;
};

/// Aggregated verdict for one deleting machine.
struct MachineReport {
  bool feasible = false;
  Complex ancilla_overlap;       // inner(A_H, A_V)
  double gram_residual = 0.0;
  bool is_swap = false;
  double swap_deviation = 0.0;
  double uncopy_residual = 0.0;  // worst case over sampled superpositions
};

/// A constructed machine: the evolution, the data that defined it, and the
/// verdicts derived from both.
struct DeletingMachine {
  Operator unitary;
  DeletingMachineSpec spec;
  MachineReport report;
};

/// Clonability verdict for a set of qubit states.
struct ClonabilityReport {
  bool clonable = false;
  double worst_overlap = 0.0;  // max pairwise |inner| among distinct states
  std::optional<Operator> witness;
};

enum class TrialMode { Copy, Delete };

/// The three constraint pairs that define a deleting machine on
/// qubit (x) qubit (x) ancilla:
///   H H A                -> H Sigma A_H
///   V V A                -> V Sigma A_V
///   (H V + V H) A        -> H Sigma A_V + V Sigma A_H
/// The third pair is intentionally unnormalized (norm sqrt(2) per side).
PartialMapSpec pb_constraints(const DeletingMachineSpec& spec);

/// The ancilla state a linear deleting machine is forced to produce when
/// deleting alpha*H + beta*V: alpha*A_H + beta*A_V, exactly as written (unit
/// norm automatically when A_H and A_V are orthonormal).
Ket required_ancilla(Complex alpha, Complex beta, const Ket& ancilla_h, const Ket& ancilla_v);

/// |inner(A_H, A_V)| -- the Gram-feasibility obstruction of pb_constraints.
/// Zero is forced for any machine deleting both preferred states.
double orthogonality_residual(const DeletingMachineSpec& spec);

/// The machine that literally exchanges the second copy with a one-qubit
/// ancilla slot holding Sigma. Its ancilla states are A_H = H, A_V = V.
DeletingMachine build_swap_machine(const Ket& sigma = qubit_h(),
                                   int uncopy_trials = 25,
                                   std::uint64_t seed = 0,
                                   double tol = kDefaultTolerance);

/// The machine with A_H = (H+V)/sqrt(2) and A_V = (H-V)/sqrt(2): the ancilla
/// states are orthogonal, yet the completed evolution is not a swap.
DeletingMachine build_counterexample_machine(const Ket& sigma = qubit_h(),
                                             int spectator_count = 0,
                                             int uncopy_trials = 25,
                                             std::uint64_t seed = 0,
                                             double tol = kDefaultTolerance);

/// Residual || U (Psi Psi A) - Psi Sigma (alpha A_H + beta A_V) || for
/// Psi = alpha*H + beta*V. A residual below tol certifies that U deletes the
/// copy of that Psi.
double verify_uncopy(const Operator& machine, const DeletingMachineSpec& spec,
                     Complex alpha, Complex beta, double tol = kDefaultTolerance);

/// One copy or delete attempt with the plain C-NOT on S = alpha*H + beta*V.
///   copy:   actual = CNOT |S 0>, target = |S S>
///   delete: actual = CNOT |S S>, target = |S 0>
struct CnotTrial {
  Ket actual;
  Ket target;
  double fidelity = 0.0;
};
CnotTrial cnot_copy_delete_trial(Complex alpha, Complex beta, TrialMode mode);

/// The rotation-conjugated C-NOT for a known superposition: with
/// R = rotation_to_basis(alpha, beta, 1),
///   copy   = (R^dag (x) R^dag) CNOT (R (x) I)
///   delete = (R^dag (x) I) CNOT (R (x) R)  =  copy^dag.
Operator mcnot_circuit(Complex alpha, Complex beta, TrialMode mode);

/// Whether one device can duplicate every state in the list: possible iff
/// the states are pairwise orthogonal after removing duplicates (overlap
/// above kDedupThreshold). When clonable, the witness is the completed
/// unitary of { Psi_i Sigma A -> Psi_i Psi_i A }.
ClonabilityReport yuen_clonability(const std::vector<Ket>& states, const Ket& sigma,
                                   const Ket& ancilla_init,
                                   double tol = kDefaultTolerance);

}  // namespace uncopy
