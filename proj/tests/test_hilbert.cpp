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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "uncopy/hilbert.hpp"

using namespace uncopy;

namespace {
const double kInvSqrt2 = std::sqrt(0.5);
}

TEST_CASE("space shapes") {
  const SpaceShape composite({2, 3});
  CHECK(composite.total_dim() == 6);
  CHECK(composite.factor_count() == 2);
  CHECK(SpaceShape::qubits(3).total_dim() == 8);
  CHECK(concat(SpaceShape::qubits(1), SpaceShape::single(3)) == composite);
  CHECK_FALSE(SpaceShape::single(4) == SpaceShape::qubits(2));

  CHECK_THROWS_AS(SpaceShape({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SpaceShape(std::vector<Eigen::Index>{}), std::invalid_argument);
  CHECK_THROWS_AS(SpaceShape::qubits(0), std::invalid_argument);
}

TEST_CASE("ket_from_amplitudes keeps amplitudes verbatim") {
  const Ket h = ket_from_amplitudes({1.0, 0.0}, SpaceShape::qubits(1));
  CHECK(h.amplitude(0) == Complex(1.0, 0.0));
  CHECK(h.amplitude(1) == Complex(0.0, 0.0));
  CHECK(std::abs(inner(h, qubit_h()) - 1.0) < 1e-15);

  const Ket s = ket_from_amplitudes({kInvSqrt2, kInvSqrt2}, SpaceShape::qubits(1));
  CHECK(s.is_normalized(1e-12));
  CHECK((s - normalize(qubit_h() + qubit_v())).norm() < 1e-15);

  const Ket composite =
      ket_from_amplitudes({1, 0, 0, 0, 0, 0}, SpaceShape({2, 3}));
  CHECK(composite.dim() == 6);

  // No implicit normalization.
  CHECK(ket_from_amplitudes({2.0, 0.0}, SpaceShape::qubits(1)).norm() == 2.0);

  CHECK_THROWS_AS(ket_from_amplitudes({1, 0, 0}, SpaceShape::qubits(1)),
                  std::invalid_argument);
}

TEST_CASE("inner products") {
  const Ket h = qubit_h();
  const Ket v = qubit_v();
  const Ket plus = normalize(h + v);
  const Ket minus = normalize(h - v);

  CHECK(inner(h, v) == Complex(0.0, 0.0));
  CHECK(std::abs(inner(plus, minus)) < 1e-15);
  // Oracle: direct amplitude sum conj(1)*1/sqrt(2) + conj(0)*1/sqrt(2).
  CHECK(std::abs(inner(h, plus) - Complex(kInvSqrt2, 0.0)) < 1e-15);

  CHECK_THROWS_AS(inner(h, ket_from_amplitudes({1, 0, 0}, SpaceShape::single(3))),
                  std::invalid_argument);
}

TEST_CASE("inner product invariants on sampled states") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 50; ++t) {
    const Ket a = haar_random_ket(4, gen);
    const Ket b = haar_random_ket(4, gen);
    const Complex ab = inner(a, b);
    const Complex ba = inner(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);

    const Ket scaled_a = Complex(1.7, -0.4) * a;
    const Ket scaled_b = Complex(-0.3, 0.9) * b;
    CHECK(std::abs(inner(scaled_a, scaled_b)) <=
          scaled_a.norm() * scaled_b.norm() + 1e-12);
  }
}

TEST_CASE("tensor products") {
  const Ket h = qubit_h();
  const Ket v = qubit_v();

  const Ket hhh = tensor({h, h, h});
  CHECK(hhh.dim() == 8);
  CHECK(hhh.amplitude(0) == Complex(1.0, 0.0));
  for (Eigen::Index i = 1; i < 8; ++i) CHECK(hhh.amplitude(i) == Complex(0.0, 0.0));

  const Ket s = qubit(kInvSqrt2, kInvSqrt2);
  const Ket s0 = tensor({s, h});
  CHECK(std::abs(s0.amplitude(0) - Complex(kInvSqrt2, 0)) < 1e-15);  // |00>
  CHECK(s0.amplitude(1) == Complex(0.0, 0.0));
  CHECK(std::abs(s0.amplitude(2) - Complex(kInvSqrt2, 0)) < 1e-15);  // |10>
  CHECK(s0.amplitude(3) == Complex(0.0, 0.0));

  CHECK(tensor({h, v}).shape() == SpaceShape::qubits(2));
  CHECK_THROWS_AS(tensor({}), std::invalid_argument);
}

TEST_CASE("tensor norm and inner-product factorization on sampled states") {
  std::mt19937_64 gen(12);
  for (int t = 0; t < 40; ++t) {
    const Ket a = Complex(0.5 + t * 0.1, 0.2) * haar_random_ket(2, gen);
    const Ket b = Complex(1.0, -0.7) * haar_random_ket(3, gen);
    CHECK(std::abs(tensor({a, b}).norm() - a.norm() * b.norm()) < 1e-12);

    const Ket c = haar_random_ket(2, gen);
    const Ket d = haar_random_ket(3, gen);
    const Complex factored = inner(a, c) * inner(b, d);
    CHECK(std::abs(inner(tensor({a, b}), tensor({c, d})) - factored) < 1e-12);
  }
}

TEST_CASE("normalize") {
  const Ket two = ket_from_amplitudes({2.0, 0.0}, SpaceShape::qubits(1));
  CHECK((normalize(two) - qubit_h()).norm() < 1e-15);

  const Ket ones = ket_from_amplitudes({1.0, 1.0}, SpaceShape::qubits(1));
  const Ket expected = ket_from_amplitudes({kInvSqrt2, kInvSqrt2}, SpaceShape::qubits(1));
  CHECK((normalize(ones) - expected).norm() < 1e-15);

  std::mt19937_64 gen(13);
  for (int t = 0; t < 20; ++t) {
    const Ket x = Complex(3.7, -1.2) * haar_random_ket(5, gen);
    CHECK((normalize(normalize(x)) - normalize(x)).norm() < 1e-14);
  }

  const Ket zero = ket_from_amplitudes({0.0, 0.0}, SpaceShape::qubits(1));
  CHECK_THROWS_AS(normalize(zero), std::invalid_argument);
}

TEST_CASE("fidelity") {
  const Ket h = qubit_h();
  const Ket v = qubit_v();
  const Ket plus = normalize(h + v);

  CHECK(fidelity(h, h) == 1.0);
  CHECK(fidelity(h, v) == 0.0);
  CHECK(std::abs(fidelity(h, plus) - 0.5) < 1e-12);  // |1/sqrt(2)|^2

  CHECK_THROWS_AS(fidelity(h, Complex(2.0, 0.0) * v), std::invalid_argument);
}

TEST_CASE("haar_random_ket") {
  const Ket phase_only = haar_random_ket(1, 99);
  CHECK(std::abs(std::abs(phase_only.amplitude(0)) - 1.0) < 1e-12);

  const Ket first = haar_random_ket(4, 7);
  const Ket second = haar_random_ket(4, 7);
  CHECK((first - second).norm() == 0.0);

  std::mt19937_64 gen(14);
  for (Eigen::Index dim : {2, 3, 8}) {
    CHECK(std::abs(haar_random_ket(dim, gen).norm() - 1.0) < 1e-12);
  }

  // Monte-Carlo oracle: uniform-sphere symmetry gives E|amp0|^2 = 1/2.
  double mean = 0.0;
  std::mt19937_64 mc(15);
  const int samples = 1000;
  for (int t = 0; t < samples; ++t) {
    mean += std::norm(haar_random_ket(2, mc).amplitude(0));
  }
  mean /= samples;
  CHECK(std::abs(mean - 0.5) < 0.05);

  CHECK_THROWS_AS(haar_random_ket(0, 1), std::invalid_argument);
}

TEST_CASE("ket arithmetic requires matching shapes") {
  const Ket h = qubit_h();
  const Ket flat = ket_from_amplitudes({1, 0, 0, 0}, SpaceShape::single(4));
  CHECK_THROWS_AS(h + ket_from_amplitudes({1, 0, 0}, SpaceShape::single(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(tensor({h, h}) + flat, std::invalid_argument);  // [2,2] vs [4]
}
