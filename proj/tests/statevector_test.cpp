// Copyright 2026 The vqse-prescreen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqse/statevector.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "vqse/hamiltonian_io.hpp"

using namespace vqse;

namespace {

StateVector random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {gauss(rng), gauss(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(n, std::move(amps));
}

Eigen::VectorXcd as_vector(const StateVector& s) {
  Eigen::VectorXcd v(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) v[i] = s[i];
  return v;
}

}  // namespace

TEST(basis_state, examples) {
  const auto zero = StateVector::basis_state(4, "0000");
  EXPECT_EQ(zero[0], Complex(1, 0));
  EXPECT_EQ(zero.dimension(), 16u);

  const auto s1000 = StateVector::basis_state(4, "1000");
  EXPECT_EQ(s1000[1], Complex(1, 0));
  EXPECT_EQ(StateVector::basis_state(4, "1100")[3], Complex(1, 0));
  EXPECT_EQ(StateVector::basis_state(4, "0110")[6], Complex(1, 0));
  EXPECT_EQ(StateVector::basis_state(4, "0010")[4], Complex(1, 0));
  EXPECT_EQ(StateVector::basis_state(2, "11")[3], Complex(1, 0));

  for (std::size_t i = 0; i < 16; ++i) {
    if (i != 1) EXPECT_EQ(s1000[i], Complex(0, 0));
  }
}

TEST(basis_state, errors) {
  EXPECT_THROW(StateVector::basis_state(4, "100"), std::invalid_argument);
  EXPECT_THROW(StateVector::basis_state(2, "1a"), std::invalid_argument);
  EXPECT_THROW(StateVector(2, std::vector<Complex>{1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(StateVector(2, std::vector<Complex>{1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(basis_label, round_trip) {
  for (std::uint64_t i = 0; i < 16; ++i) EXPECT_EQ(basis_index(4, basis_label(4, i)), i);
  EXPECT_EQ(basis_label(4, 1), "1000");
}

TEST(apply_pauli_exp, zero_angle_is_identity) {
  std::mt19937_64 rng(1);
  const auto s = random_state(rng, 3);
  const auto out = apply_pauli_exp(s, PauliTerm::from_string(3, "X0 Y1 Z2"), 0.0);
  EXPECT_EQ(out, s);
}

TEST(apply_pauli_exp, z_eigenstate_phase) {
  const auto out = apply_pauli_exp(StateVector(1), PauliTerm::from_string(1, "Z0"), M_PI / 2);
  EXPECT_NEAR(out[0].real(), 0.0, 1e-15);
  EXPECT_NEAR(out[0].imag(), -1.0, 1e-15);
  EXPECT_EQ(out[1], Complex(0, 0));
}

TEST(apply_pauli_exp, matches_matrix_exponential) {
  std::mt19937_64 rng(5);
  const auto s = random_state(rng, 3);
  const auto p = PauliTerm::from_string(3, "X0 Y1");
  const auto out = apply_pauli_exp(s, p, 0.37);
  const Eigen::VectorXcd expected =
      vqse::testing::expm_minus_i(vqse::testing::kron_word(3, p.word), 0.37) * as_vector(s);
  EXPECT_LT((as_vector(out) - expected).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(apply_pauli_exp, random_words_match_matrix_exponential) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto s = random_state(rng, n);
    const PauliTerm p(n, vqse::testing::random_word(rng, n));
    const double angle = u(rng);
    const Eigen::VectorXcd expected =
        vqse::testing::expm_minus_i(vqse::testing::kron_word(n, p.word), angle) * as_vector(s);
    ASSERT_LT((as_vector(apply_pauli_exp(s, p, angle)) - expected).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(apply_pauli_exp, requires_unit_coefficient) {
  EXPECT_THROW(apply_pauli_exp(StateVector(2), PauliTerm::from_string(2, "X0", 0.5), 0.1),
               std::invalid_argument);
  EXPECT_THROW(apply_pauli_exp(StateVector(2), PauliTerm::from_string(3, "X0"), 0.1),
               std::invalid_argument);
}

TEST(apply_pauli_exp, norm_preserved) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto s = random_state(rng, 4);
  for (int k = 0; k < 500; ++k) s.apply_pauli_exp(vqse::testing::random_word(rng, 4), u(rng));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
}

TEST(apply_pauli_exp, angles_add) {
  std::mt19937_64 rng(4);
  const auto s = random_state(rng, 4);
  const auto p = PauliTerm::from_string(4, "Y0 X2 Z3");
  const auto twice = apply_pauli_exp(apply_pauli_exp(s, p, 0.4), p, 1.1);
  const auto once = apply_pauli_exp(s, p, 1.5);
  for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_NEAR(std::abs(twice[i] - once[i]), 0.0, 1e-10);
}

TEST(expectation, examples) {
  const PauliSum z0(4, {PauliTerm::from_string(4, "Z0")});
  EXPECT_DOUBLE_EQ(expectation(StateVector::basis_state(4, "0000"), z0), 1.0);
  EXPECT_DOUBLE_EQ(expectation(StateVector::basis_state(4, "1000"), z0), -1.0);

  const double r = 1.0 / std::sqrt(2.0);
  const StateVector plus(1, {r, r});
  EXPECT_NEAR(expectation(plus, PauliSum(1, {PauliTerm::from_string(1, "Z0")})), 0.0, 1e-15);
  EXPECT_NEAR(expectation(plus, PauliSum(1, {PauliTerm::from_string(1, "X0")})), 1.0, 1e-15);
}

TEST(expectation, h2_ground_eigenvector) {
  const auto file = parse_hamiltonian_file(vqse::testing::fixture("H2_r0.74.ham"));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
      vqse::testing::kron_sum(file.hamiltonian));
  const Eigen::VectorXcd v = eig.eigenvectors().col(0);
  const StateVector s(4, std::vector<Complex>(v.data(), v.data() + v.size()));
  EXPECT_NEAR(expectation(s, file.hamiltonian), eig.eigenvalues()[0], 1e-10);
}

TEST(expectation, linear_in_hamiltonian) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng, 4);
    const auto h1 = vqse::testing::random_hermitian(rng, 4, 8);
    const auto h2 = vqse::testing::random_hermitian(rng, 4, 8);
    const double alpha = -1.7;
    EXPECT_NEAR(expectation(s, h1 * Complex(alpha, 0) + h2),
                alpha * expectation(s, h1) + expectation(s, h2), 1e-12);
  }
}

TEST(expectation, rejects_bad_input) {
  EXPECT_THROW(expectation(StateVector(1), PauliSum(1, {PauliTerm::from_string(1, "Y0", {0, 1})})),
               std::invalid_argument);
  EXPECT_THROW(expectation(StateVector(2), PauliSum(1, {PauliTerm::from_string(1, "Z0")})),
               std::invalid_argument);
}

TEST(overlap, examples) {
  std::mt19937_64 rng(6);
  const auto a = random_state(rng, 3);
  EXPECT_NEAR(overlap_sq(a, a), 1.0, 1e-14);
  EXPECT_EQ(overlap_sq(StateVector::basis_state(2, "10"), StateVector::basis_state(2, "01")), 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(overlap_sq(StateVector(1), StateVector(1, {r, r})), 0.5, 1e-15);
  EXPECT_THROW(overlap_sq(StateVector(1), StateVector(2)), std::invalid_argument);
}

TEST(overlap, orthogonality_preserved_under_shared_rotations) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<std::pair<PauliWord, double>> circuit;
  for (int k = 0; k < 40; ++k) circuit.emplace_back(vqse::testing::random_word(rng, 4), u(rng));
  std::vector<StateVector> evolved;
  for (std::uint64_t j = 0; j < 16; ++j) {
    auto s = StateVector::basis_state(4, j);
    for (const auto& [w, a] : circuit) s.apply_pauli_exp(w, a);
    evolved.push_back(s);
  }
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = i + 1; j < 16; ++j) EXPECT_LT(overlap_sq(evolved[i], evolved[j]), 1e-10);
  }
}
