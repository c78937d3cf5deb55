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

#include "uncopy/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace uncopy {

SpaceShape::SpaceShape(std::vector<Eigen::Index> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("SpaceShape: at least one factor is required");
  }
  for (Eigen::Index d : dims_) {
    if (d < 1) {
      throw std::invalid_argument("SpaceShape: factor dimensions must be >= 1, got " +
                                  std::to_string(d));
    }
  }
}

SpaceShape SpaceShape::single(Eigen::Index dim) { return SpaceShape({dim}); }

SpaceShape SpaceShape::qubits(std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("SpaceShape::qubits: count must be >= 1");
  }
  return SpaceShape(std::vector<Eigen::Index>(count, 2));
}

Eigen::Index SpaceShape::total_dim() const {
  Eigen::Index total = 1;
  for (Eigen::Index d : dims_) total *= d;
  return total;
}

SpaceShape concat(const SpaceShape& a, const SpaceShape& b) {
  std::vector<Eigen::Index> dims = a.factor_dims();
  dims.insert(dims.end(), b.factor_dims().begin(), b.factor_dims().end());
  return SpaceShape(std::move(dims));
}

Ket::Ket(Vector amplitudes, SpaceShape shape)
    : amps_(std::move(amplitudes)), shape_(std::move(shape)) {
  if (amps_.size() != shape_.total_dim()) {
    throw std::invalid_argument("Ket: " + std::to_string(amps_.size()) +
                                " amplitudes do not fill a space of dimension " +
                                std::to_string(shape_.total_dim()));
  }
}

bool Ket::is_normalized(double tol) const { return std::abs(norm() - 1.0) < tol; }

namespace {

void require_same_shape(const Ket& a, const Ket& b, const char* what) {
  if (!(a.shape() == b.shape())) {
    throw std::invalid_argument(std::string(what) + ": shapes differ");
  }
}

}  // namespace

Ket operator+(const Ket& a, const Ket& b) {
  require_same_shape(a, b, "Ket addition");
  return Ket(a.amplitudes() + b.amplitudes(), a.shape());
}

Ket operator-(const Ket& a, const Ket& b) {
  require_same_shape(a, b, "Ket subtraction");
  return Ket(a.amplitudes() - b.amplitudes(), a.shape());
}

Ket operator*(Complex scale, const Ket& a) { return Ket(scale * a.amplitudes(), a.shape()); }

Ket ket_from_amplitudes(const std::vector<Complex>& amps, const SpaceShape& shape) {
  if (static_cast<Eigen::Index>(amps.size()) != shape.total_dim()) {
    throw std::invalid_argument("ket_from_amplitudes: " + std::to_string(amps.size()) +
                                " amplitudes do not fill a space of dimension " +
                                std::to_string(shape.total_dim()));
  }
  Vector v(shape.total_dim());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = amps[static_cast<std::size_t>(i)];
  return Ket(std::move(v), shape);
}

Ket basis_ket(Eigen::Index index, const SpaceShape& shape) {
  if (index < 0 || index >= shape.total_dim()) {
    throw std::invalid_argument("basis_ket: index out of range");
  }
  Vector v = Vector::Zero(shape.total_dim());
  v(index) = 1.0;
  return Ket(std::move(v), shape);
}

Ket qubit_h() { return basis_ket(0, SpaceShape::qubits(1)); }

Ket qubit_v() { return basis_ket(1, SpaceShape::qubits(1)); }

Ket qubit(Complex alpha, Complex beta) {
  Vector v(2);
  v(0) = alpha;
  v(1) = beta;
  return Ket(std::move(v), SpaceShape::qubits(1));
}

Complex inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner: dimensions differ (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  }
  // Eigen's dot conjugates its left operand.
  return a.amplitudes().dot(b.amplitudes());
}

Ket tensor(const std::vector<Ket>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("tensor: empty part list");
  }
  Vector result = parts.front().amplitudes();
  SpaceShape shape = parts.front().shape();
  for (std::size_t p = 1; p < parts.size(); ++p) {
    const Vector& rhs = parts[p].amplitudes();
    Vector next(result.size() * rhs.size());
    for (Eigen::Index i = 0; i < result.size(); ++i) {
      next.segment(i * rhs.size(), rhs.size()) = result(i) * rhs;
    }
    result = std::move(next);
    shape = concat(shape, parts[p].shape());
  }
  return Ket(std::move(result), std::move(shape));
}

Ket normalize(const Ket& a) {
  const double n = a.norm();
  if (n < kDegenerateNormThreshold) {
    throw std::invalid_argument("normalize: vector norm below degenerate threshold");
  }
  return Ket(a.amplitudes() / n, a.shape());
}

double fidelity(const Ket& a, const Ket& b) {
  if (!a.is_normalized() || !b.is_normalized()) {
    throw std::invalid_argument("fidelity: both states must be normalized");
  }
  return std::min(1.0, std::norm(inner(a, b)));
}

Ket haar_random_ket(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return haar_random_ket(dim, gen);
}

Ket haar_random_ket(Eigen::Index dim, std::mt19937_64& gen) {
  if (dim < 1) {
    throw std::invalid_argument("haar_random_ket: dim must be >= 1");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = normal(gen);
    const double im = normal(gen);
    v(i) = Complex(re, im);
  }
  return normalize(Ket(std::move(v), SpaceShape::single(dim)));
}

}  // namespace uncopy
