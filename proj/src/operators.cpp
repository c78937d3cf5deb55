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

#include "uncopy/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace uncopy {

namespace {

// Residual norm above which a canonical vector is accepted when extending an
// orthonormal family to a full basis. Must stay well above the working
// precision and well below 1/sqrt(dim).
constexpr double kExtensionThreshold = 1e-8;

void check_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
}

void check_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimensions differ (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void check_partial_map(const PartialMapSpec& spec) {
  if (spec.pairs.empty()) {
    throw std::invalid_argument("PartialMapSpec: at least one constraint pair is required");
  }
  const Eigen::Index dim = spec.shape.total_dim();
  double max_input_norm = 0.0;
  for (const auto& [in, out] : spec.pairs) {
    check_same_dim(in.dim(), dim, "PartialMapSpec input");
    check_same_dim(out.dim(), dim, "PartialMapSpec output");
    max_input_norm = std::max(max_input_norm, in.norm());
  }
  if (max_input_norm < kDegenerateNormThreshold) {
    throw std::invalid_argument("PartialMapSpec: all inputs are near-zero");
  }
}

// Two-pass modified Gram-Schmidt of `v` against the vectors in `basis`.
void orthogonalize_against(const std::vector<Vector>& basis, Vector& v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& q : basis) {
      v -= q.dot(v) * q;
    }
  }
}

struct PairedOrthoResult {
  std::vector<Vector> basis;      // orthonormal input family
  std::vector<Vector> images;     // outputs carried with identical coefficients
  double worst_dropped_residual;  // max image norm over dropped (dependent) inputs
};

// Modified Gram-Schmidt with re-orthogonalization over the pair inputs,
// mirroring every elimination step on the outputs. Inputs whose residual
// norm falls below kDependencyThreshold are dropped; the norm their mirrored
// output retains at that point measures how badly the output family violates
// the same linear dependency.
PairedOrthoResult orthonormalize_pairs(const PartialMapSpec& spec, bool reversed) {
  PairedOrthoResult result;
  result.worst_dropped_residual = 0.0;
  for (const auto& pair : spec.pairs) {
    Vector v = reversed ? pair.second.amplitudes() : pair.first.amplitudes();
    Vector y = reversed ? pair.first.amplitudes() : pair.second.amplitudes();
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < result.basis.size(); ++i) {
        const Complex coeff = result.basis[i].dot(v);
        v -= coeff * result.basis[i];
        y -= coeff * result.images[i];
      }
    }
    const double residual = v.norm();
    if (residual < kDependencyThreshold) {
      result.worst_dropped_residual = std::max(result.worst_dropped_residual, y.norm());
      continue;
    }
    result.basis.push_back(v / residual);
    result.images.push_back(y / residual);
  }
  return result;
}

// Extends an orthonormal family to a full basis with canonical vectors,
// lowest index first, re-orthonormalized against the family.
void extend_to_full_basis(std::vector<Vector>& family, Eigen::Index dim) {
  for (Eigen::Index j = 0; j < dim && family.size() < static_cast<std::size_t>(dim); ++j) {
    Vector v = Vector::Zero(dim);
    v(j) = 1.0;
    orthogonalize_against(family, v);
    const double residual = v.norm();
    if (residual > kExtensionThreshold) {
      family.push_back(v / residual);
    }
  }
  if (family.size() != static_cast<std::size_t>(dim)) {
    throw std::runtime_error("extend_to_full_basis: family is incomplete");
  }
}

std::vector<Eigen::Index> composite_strides(const SpaceShape& shape) {
  const auto& dims = shape.factor_dims();
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (std::size_t t = dims.size(); t-- > 1;) {
    strides[t - 1] = strides[t] * dims[t];
  }
  return strides;
}

}  // namespace

Operator::Operator(Matrix matrix, SpaceShape shape)
    : mat_(std::move(matrix)), shape_(std::move(shape)) {
  check_square(mat_, "Operator");
  if (mat_.rows() != shape_.total_dim()) {
    throw std::invalid_argument("Operator: matrix side " + std::to_string(mat_.rows()) +
                                " does not match space dimension " +
                                std::to_string(shape_.total_dim()));
  }
}

Operator identity_op(const SpaceShape& shape) {
  const Eigen::Index d = shape.total_dim();
  return Operator(Matrix::Identity(d, d), shape);
}

Ket apply(const Operator& op, const Ket& x) {
  check_same_dim(op.dim(), x.dim(), "apply");
  return Ket(op.matrix() * x.amplitudes(), x.shape());
}

Operator compose(const Operator& a, const Operator& b) {
  check_same_dim(a.dim(), b.dim(), "compose");
  return Operator(a.matrix() * b.matrix(), a.shape());
}

Operator tensor_op(const std::vector<Operator>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("tensor_op: empty part list");
  }
  Matrix result = parts.front().matrix();
  SpaceShape shape = parts.front().shape();
  for (std::size_t p = 1; p < parts.size(); ++p) {
    const Matrix& rhs = parts[p].matrix();
    Matrix next(result.rows() * rhs.rows(), result.cols() * rhs.cols());
    for (Eigen::Index i = 0; i < result.rows(); ++i) {
      for (Eigen::Index j = 0; j < result.cols(); ++j) {
        next.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) =
            result(i, j) * rhs;
      }
    }
    result = std::move(next);
    shape = concat(shape, parts[p].shape());
  }
  return Operator(std::move(result), std::move(shape));
}

Operator adjoint(const Operator& op) { return Operator(op.matrix().adjoint(), op.shape()); }

UnitaryCheck is_unitary(const Operator& op, double tol) {
  const Matrix gram = op.matrix().adjoint() * op.matrix();
  const Matrix identity = Matrix::Identity(op.dim(), op.dim());
  const double deviation = (gram - identity).cwiseAbs().maxCoeff();
  return {deviation < tol, deviation};
}

GramReport gram_feasibility(const PartialMapSpec& spec, double tol) {
  check_partial_map(spec);
  const std::size_t n = spec.pairs.size();

  GramReport report;
  report.input_gram = Matrix(n, n);
  report.output_gram = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      report.input_gram(i, j) =
          spec.pairs[i].first.amplitudes().dot(spec.pairs[j].first.amplitudes());
      report.output_gram(i, j) =
          spec.pairs[i].second.amplitudes().dot(spec.pairs[j].second.amplitudes());
    }
  }
  report.max_residual = (report.input_gram - report.output_gram).cwiseAbs().maxCoeff();

  // Dependency structure is judged on the vectors themselves: a combination
  // that annihilates the inputs must annihilate the outputs, and vice versa.
  const PairedOrthoResult forward = orthonormalize_pairs(spec, /*reversed=*/false);
  const PairedOrthoResult backward = orthonormalize_pairs(spec, /*reversed=*/true);
  report.rank = static_cast<Eigen::Index>(forward.basis.size());

  const double dependency_tol = std::max(tol, kDependencyThreshold);
  const bool dependencies_match = forward.worst_dropped_residual < dependency_tol &&
                                  backward.worst_dropped_residual < dependency_tol;
  report.feasible = report.max_residual < tol && dependencies_match;
  return report;
}

Operator complete_to_unitary(const PartialMapSpec& spec, double tol) {
  const GramReport gram = gram_feasibility(spec, tol);
  if (!gram.feasible) {
    throw std::invalid_argument(
        "complete_to_unitary: spec is infeasible (Gram residual " +
        std::to_string(gram.max_residual) + ")");
  }

  const Eigen::Index dim = spec.shape.total_dim();
  PairedOrthoResult ortho = orthonormalize_pairs(spec, /*reversed=*/false);
  std::vector<Vector> input_basis = std::move(ortho.basis);
  std::vector<Vector> output_basis = std::move(ortho.images);
  extend_to_full_basis(input_basis, dim);
  extend_to_full_basis(output_basis, dim);

  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    u += output_basis[static_cast<std::size_t>(k)] *
         input_basis[static_cast<std::size_t>(k)].adjoint();
  }

  Operator result(std::move(u), spec.shape);
  for (const auto& [in, out] : spec.pairs) {
    const double residual = (result.matrix() * in.amplitudes() - out.amplitudes()).norm();
    if (residual > tol * std::max(1.0, in.norm())) {
      throw std::runtime_error(
          "complete_to_unitary: constraint verification failed (residual " +
          std::to_string(residual) + ")");
    }
  }
  const UnitaryCheck check = is_unitary(result, tol);
  if (!check.unitary) {
    throw std::runtime_error("complete_to_unitary: result failed the unitarity check");
  }
  return result;
}

Operator swap_factors(const SpaceShape& shape, std::size_t factor_i, std::size_t factor_j) {
  const auto& dims = shape.factor_dims();
  if (factor_i >= dims.size() || factor_j >= dims.size()) {
    throw std::invalid_argument("swap_factors: factor index out of range");
  }
  if (dims[factor_i] != dims[factor_j]) {
    throw std::invalid_argument("swap_factors: factors have unequal dimensions");
  }
  const Eigen::Index dim = shape.total_dim();
  const std::vector<Eigen::Index> strides = composite_strides(shape);

  Matrix p = Matrix::Zero(dim, dim);
  std::vector<Eigen::Index> digits(dims.size());
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (std::size_t t = 0; t < dims.size(); ++t) {
      digits[t] = (x / strides[t]) % dims[t];
    }
    std::swap(digits[factor_i], digits[factor_j]);
    Eigen::Index y = 0;
    for (std::size_t t = 0; t < dims.size(); ++t) {
      y += digits[t] * strides[t];
    }
    p(y, x) = 1.0;
  }
  return Operator(std::move(p), shape);
}

Operator cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;  // 00 -> 00
  m(1, 1) = 1.0;  // 01 -> 01
  m(3, 2) = 1.0;  // 10 -> 11
  m(2, 3) = 1.0;  // 11 -> 10
  return Operator(std::move(m), SpaceShape::qubits(2));
}

Operator rotation_to_basis(Complex alpha, Complex beta, int target) {
  if (target != 0 && target != 1) {
    throw std::invalid_argument("rotation_to_basis: target must be 0 or 1");
  }
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kDefaultTolerance) {
    throw std::invalid_argument("rotation_to_basis: (alpha, beta) is not normalized");
  }
  Matrix m(2, 2);
  if (target == 0) {
    m << std::conj(alpha), std::conj(beta), -beta, alpha;
  } else {
    m << -beta, alpha, std::conj(alpha), std::conj(beta);
  }
  return Operator(std::move(m), SpaceShape::qubits(1));
}

SwapCheck acts_as_swap_on(const Operator& op, const SpaceShape& shape,
                          std::size_t factor_i, std::size_t factor_j,
                          const std::vector<Ket>& probes, double tol) {
  if (probes.empty()) {
    throw std::invalid_argument("acts_as_swap_on: empty probe list");
  }
  const Operator swap = swap_factors(shape, factor_i, factor_j);
  check_same_dim(op.dim(), shape.total_dim(), "acts_as_swap_on");

  std::vector<Vector> actual, swapped;
  actual.reserve(probes.size());
  swapped.reserve(probes.size());
  for (const Ket& probe : probes) {
    check_same_dim(probe.dim(), op.dim(), "acts_as_swap_on probe");
    actual.push_back(op.matrix() * probe.amplitudes());
    swapped.push_back(swap.matrix() * probe.amplitudes());
  }

  // One global phase, fixed from the first probe whose image overlaps the
  // swapped image.
  Complex phase(1.0, 0.0);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Complex overlap = swapped[k].dot(actual[k]);
    if (std::abs(overlap) > kDegenerateNormThreshold) {
      phase = overlap / std::abs(overlap);
      break;
    }
  }

  double max_deviation = 0.0;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    max_deviation = std::max(max_deviation, (actual[k] - phase * swapped[k]).norm());
  }
  return {max_deviation < tol, max_deviation};
}

}  // namespace uncopy
