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

#include <cstddef>
#include <utility>
#include <vector>

#include "uncopy/hilbert.hpp"

namespace uncopy {

/// Residual norm below which a constraint vector counts as linearly
/// dependent on its predecessors during orthonormalization.
inline constexpr double kDependencyThreshold = 1e-12;

/// Dense operator on a composite space (domain = codomain).
class Operator {
 public:
  /// Throws std::invalid_argument unless the matrix is square with side
  /// equal to shape.total_dim().
  Operator(Matrix matrix, SpaceShape shape);

  const Matrix& matrix() const { return mat_; }
  const SpaceShape& shape() const { return shape_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  Matrix mat_;
  SpaceShape shape_;
};

/// An ordered list of (input -> output) constraint pairs partially defining
/// a machine on one composite space. Pairs may be unnormalized.
struct PartialMapSpec {
  std::vector<std::pair<Ket, Ket>> pairs;
  SpaceShape shape;
};

/// Verdict of the Gram-matrix feasibility analysis: an inner-product
/// preserving (hence unitary) extension of the partial map exists iff the
/// input and output Gram matrices coincide and every linear dependency among
/// the inputs maps to the same dependency among the outputs.
struct GramReport {
  bool feasible = false;
  Matrix input_gram;
  Matrix output_gram;
  double max_residual = 0.0;  // max entrywise |input_gram - output_gram|
  Eigen::Index rank = 0;      // rank of the input family
};

struct UnitaryCheck {
  bool unitary = false;
  double deviation = 0.0;  // max entrywise |U^dag U - I|
};

struct SwapCheck {
  bool matches = false;
  double max_deviation = 0.0;
};

Operator identity_op(const SpaceShape& shape);

/// Matrix-vector product. Requires equal total dimensions; the result keeps
/// the input ket's shape.
Ket apply(const Operator& op, const Ket& x);

/// Matrix product a*b (b is applied first).
Operator compose(const Operator& a, const Operator& b);

/// Kronecker product of operators respecting factor order.
Operator tensor_op(const std::vector<Operator>& parts);

Operator adjoint(const Operator& op);

UnitaryCheck is_unitary(const Operator& op, double tol = kDefaultTolerance);

/// Compares pairwise inner products of inputs and outputs and their
/// linear-dependency structure. Infeasibility is a verdict, not an error.
GramReport gram_feasibility(const PartialMapSpec& spec, double tol = kDefaultTolerance);

/// Completes a feasible partial map to a full unitary:
/// modified Gram-Schmidt with re-orthogonalization over the inputs (vectors
/// with residual norm < kDependencyThreshold are dropped after checking the
/// matching output dependency), identical combination coefficients applied
/// to the outputs, both orthonormal families extended to full bases by
/// canonical vectors in ascending index order, and the sum of outer products
/// output_basis[i] * input_basis[i]^dag. The completion is non-unique; this
/// construction is deterministic. Every constraint pair is re-verified
/// against the result.
///
/// Throws std::invalid_argument on an infeasible spec and std::runtime_error
/// if post-construction verification fails.
Operator complete_to_unitary(const PartialMapSpec& spec, double tol = kDefaultTolerance);

/// Permutation operator exchanging factors i and j (0-based), which must
/// have equal dimensions.
Operator swap_factors(const SpaceShape& shape, std::size_t factor_i, std::size_t factor_j);

/// Two-qubit controlled-not, control on the first factor:
/// 00->00, 01->01, 10->11, 11->10.
Operator cnot();

/// Single-qubit rotation taking alpha*H + beta*V to the chosen basis state.
/// For target 0 the rows are [conj(alpha), conj(beta); -beta, alpha]; for
/// target 1 the two rows are exchanged. Requires |alpha|^2 + |beta|^2 = 1.
Operator rotation_to_basis(Complex alpha, Complex beta, int target);

/// Tests whether op acts on the probes like the literal exchange of factors
/// i and j, up to one global phase. The phase is fixed from the first probe
/// whose image overlaps the swapped image; equivalence up to local unitaries
/// is out of scope. Throws on an empty probe list.
SwapCheck acts_as_swap_on(const Operator& op, const SpaceShape& shape,
                          std::size_t factor_i, std::size_t factor_j,
                          const std::vector<Ket>& probes,
                          double tol = kDefaultTolerance);

}  // namespace uncopy
