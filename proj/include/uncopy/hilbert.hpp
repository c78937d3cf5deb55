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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace uncopy {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Tolerance for normalization and equality checks.
inline constexpr double kDefaultTolerance = 1e-10;
/// Below this norm a vector is treated as numerically zero.
inline constexpr double kDegenerateNormThreshold = 1e-12;

/// Ordered factor dimensions of a tensor-product space. Qubits are 2.
/// Composite indices are big-endian over the factors: the first factor is
/// the most significant digit.
class SpaceShape {
 public:
  SpaceShape() = default;
  /// Throws std::invalid_argument if the list is empty or any dimension < 1.
  explicit SpaceShape(std::vector<Eigen::Index> factor_dims);

  static SpaceShape single(Eigen::Index dim);
  static SpaceShape qubits(std::size_t count);

  const std::vector<Eigen::Index>& factor_dims() const { return dims_; }
  std::size_t factor_count() const { return dims_.size(); }
  Eigen::Index total_dim() const;

  bool operator==(const SpaceShape& other) const = default;

 private:
  std::vector<Eigen::Index> dims_;
};

/// Tensor-product composition of two shapes (concatenation of factors).
SpaceShape concat(const SpaceShape& a, const SpaceShape& b);

/// A vector of complex amplitudes over a tensor-product space.
///
/// Kets are value-semantic and immutable after construction; every operation
/// returns a new value. A Ket is not implicitly normalized -- constraint
/// vectors such as sums of basis products are deliberately representable
/// with norm != 1.
class Ket {
 public:
  /// Throws std::invalid_argument if amplitudes.size() != shape.total_dim().
  Ket(Vector amplitudes, SpaceShape shape);

  const Vector& amplitudes() const { return amps_; }
  const SpaceShape& shape() const { return shape_; }
  Eigen::Index dim() const { return amps_.size(); }
  Complex amplitude(Eigen::Index i) const { return amps_(i); }

  double norm() const { return amps_.norm(); }
  bool is_normalized(double tol = kDefaultTolerance) const;

 private:
  Vector amps_;
  SpaceShape shape_;
};

// Linear combinations of kets over one space (shapes must match).
Ket operator+(const Ket& a, const Ket& b);
Ket operator-(const Ket& a, const Ket& b);
Ket operator*(Complex scale, const Ket& a);

/// Builds a Ket with exactly the given amplitudes; no implicit normalization.
Ket ket_from_amplitudes(const std::vector<Complex>& amps, const SpaceShape& shape);

/// Computational basis vector of the given composite index.
Ket basis_ket(Eigen::Index index, const SpaceShape& shape);

/// The preferred qubit states: H is index 0, V is index 1.
Ket qubit_h();
Ket qubit_v();
/// alpha*H + beta*V, exactly as given (not normalized).
Ket qubit(Complex alpha, Complex beta);

/// Inner product, conjugate-linear in the first argument. Requires equal
/// total dimensions (factorizations may differ).
Complex inner(const Ket& a, const Ket& b);

/// Kronecker product of the parts in the given order; the resulting shape is
/// the concatenation of the part shapes. Throws on an empty list.
Ket tensor(const std::vector<Ket>& parts);

/// a / ||a||. Throws std::invalid_argument on a near-zero vector.
Ket normalize(const Ket& a);

/// |<a,b>|^2 in [0,1]. Both arguments must be normalized.
double fidelity(const Ket& a, const Ket& b);

/// Normalized state uniform on the unit sphere: independent standard-normal
/// real and imaginary parts, then normalized. Deterministic for a fixed seed
/// within one build; bit-exact streams across implementations are a non-goal.
Ket haar_random_ket(Eigen::Index dim, std::uint64_t seed);

/// Stream variant drawing from an existing engine (used by sampling loops).
Ket haar_random_ket(Eigen::Index dim, std::mt19937_64& gen);

}  // namespace uncopy
