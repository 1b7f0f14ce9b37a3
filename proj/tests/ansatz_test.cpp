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

#include "vqse/ansatz.hpp"

#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "vqse/hamiltonian_io.hpp"

using namespace vqse;
using vqse::testing::expm_minus_i;
using vqse::testing::kron_sum;
using vqse::testing::kron_word;

namespace {

PauliSum h2() { return parse_hamiltonian_file(vqse::testing::fixture("H2_r0.74.ham")).hamiltonian; }

// U(θ) assembled from the Hamiltonian words and whole-generator exponentials,
// without looking at the circuit's grouping.
Eigen::MatrixXcd dense_unitary(const PauliSum& h, const std::vector<UccGenerator>& gens,
                               int depth, const std::vector<double>& theta) {
  const int n = h.n_qubits();
  const auto dim = std::size_t{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  std::size_t k = 0;
  for (int layer = 0; layer < depth; ++layer) {
    for (const auto& t : h.terms()) {
      if (t.word.is_identity()) continue;
      u = expm_minus_i(t.coefficient.real() * kron_word(n, t.word), theta[k++]) * u;
    }
    for (const auto& g : gens) {
      const Eigen::MatrixXcd arg = theta[k++] * kron_sum(g.generator);
      u = arg.exp() * u;
    }
  }
  return u;
}

Eigen::MatrixXcd circuit_matrix(const AnsatzCircuit& c, const std::vector<double>& theta) {
  const auto dim = std::size_t{1} << c.n_qubits();
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto s = apply(c, theta, StateVector::basis_state(c.n_qubits(), j));
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = s[i];
  }
  return m;
}

}  // namespace

TEST(build_ansatz, parameter_counts) {
  const PauliSum small(4, {PauliTerm::from_string(4, "I", -1.0), PauliTerm::from_string(4, "Z0", 0.3),
                           PauliTerm::from_string(4, "X0 X2", 0.1)});
  const auto gens = ucc_generators(4, 2);
  EXPECT_EQ(build_ansatz(small, gens, 1).parameter_count(), 5u);
  EXPECT_EQ(build_ansatz(small, gens, 3).parameter_count(), 15u);

  const auto c = build_ansatz(h2(), gens, 2);
  EXPECT_EQ(c.parameter_count(), 34u);
  EXPECT_EQ(c.depth(), 2);
  EXPECT_EQ(c.groups()[14].origin, GroupOrigin::UccSingle);
  EXPECT_EQ(c.groups()[16].origin, GroupOrigin::UccDouble);
  EXPECT_EQ(c.groups()[17].layer, 1);
  EXPECT_EQ(c.groups()[16].terms.size(), 8u);
}

TEST(build_ansatz, rejects_bad_input) {
  const auto gens = ucc_generators(4, 2);
  EXPECT_THROW(build_ansatz(PauliSum(4, {PauliTerm::identity(4)}), gens, 1), std::invalid_argument);
  EXPECT_THROW(build_ansatz(h2(), gens, 0), std::invalid_argument);
  EXPECT_THROW(build_ansatz(PauliSum(4, {PauliTerm::from_string(4, "Y0", {0, 1})}), gens, 1),
               std::invalid_argument);
  std::vector<UccGenerator> hermitian{{{}, PauliSum(4, {PauliTerm::from_string(4, "X0")})}};
  EXPECT_THROW(build_ansatz(h2(), hermitian, 1), std::invalid_argument);
}

TEST(apply, zero_theta_is_identity) {
  const auto c = build_ansatz(h2(), ucc_generators(4, 2), 2);
  const std::vector<double> zero(c.parameter_count(), 0.0);
  for (std::uint64_t j = 0; j < 16; ++j) {
    const auto s = StateVector::basis_state(4, j);
    EXPECT_EQ(apply(c, zero, s), s);
  }
}

TEST(apply, single_group_reduces_to_kernel) {
  const auto word = PauliTerm::from_string(3, "X0 Z2");
  const AnsatzCircuit c(3, 1, {{0, GroupOrigin::Custom, 0, "g", {{1.0, word.word}}}});
  const auto s = StateVector::basis_state(3, "100");
  const std::vector<double> theta{0.81};
  EXPECT_EQ(apply(c, theta, s), apply_pauli_exp(s, word, 0.81));
}

TEST(apply, matches_dense_exponential_product) {
  const auto h = h2();
  const auto gens = ucc_generators(4, 2);
  const auto c = build_ansatz(h, gens, 2);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto theta = vqse::testing::random_angles(rng, c.parameter_count());
    const auto expected = dense_unitary(h, gens, 2, theta);
    ASSERT_LT((circuit_matrix(c, theta) - expected).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(apply, unitary) {
  const auto c = build_ansatz(h2(), ucc_generators(4, 2), 2);
  std::mt19937_64 rng(22);
  const auto theta = vqse::testing::random_angles(rng, c.parameter_count());
  const auto u = circuit_matrix(c, theta);
  EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(apply, deterministic) {
  const auto c = build_ansatz(h2(), ucc_generators(4, 2), 2);
  std::mt19937_64 rng(23);
  const auto theta = vqse::testing::random_angles(rng, c.parameter_count());
  const auto s = StateVector::basis_state(4, "1100");
  EXPECT_EQ(apply(c, theta, s), apply(c, theta, s));
}

TEST(apply, parameter_locality) {
  // Each parameter drives only its own group: diagonal words merely phase
  // |1100>, while the double excitation moves it.
  const auto c = build_ansatz(h2(), ucc_generators(4, 2), 1);
  std::vector<double> theta(c.parameter_count(), 0.0);
  const auto s = StateVector::basis_state(4, "1100");
  for (std::size_t k = 0; k < c.parameter_count(); ++k) {
    if (c.groups()[k].origin != GroupOrigin::HamiltonianLayer) continue;
    const auto word = c.groups()[k].terms[0].word;
    if (word.x_mask() != 0) continue;
    theta[k] = 0.7;
    EXPECT_NEAR(overlap_sq(apply(c, theta, s), s), 1.0, 1e-14) << c.groups()[k].label;
    theta[k] = 0.0;
  }
  for (std::size_t k = 0; k < c.parameter_count(); ++k) {
    if (c.groups()[k].origin != GroupOrigin::UccDouble) continue;
    theta[k] = 0.3;
    EXPECT_LT(overlap_sq(apply(c, theta, s), s), 1.0 - 1e-3);
    theta[k] = 0.0;
  }
}

TEST(apply, theta_size_checked) {
  const auto c = build_ansatz(h2(), ucc_generators(4, 2), 1);
  EXPECT_THROW(apply(c, std::vector<double>(3, 0.0), StateVector(4)), std::invalid_argument);
  EXPECT_THROW(apply(c, std::vector<double>(c.parameter_count(), 0.0), StateVector(3)),
               std::invalid_argument);
}

TEST(circuit, rejects_bad_groups) {
  const auto w = PauliTerm::from_string(2, "X1").word;
  EXPECT_THROW(AnsatzCircuit(2, 1, {{1, GroupOrigin::Custom, 0, "g", {{1.0, w}}}}),
               std::invalid_argument);
  EXPECT_THROW(AnsatzCircuit(1, 1, {{0, GroupOrigin::Custom, 0, "g", {{1.0, w}}}}),
               std::invalid_argument);
}

TEST(circuit, summary_json) {
  const auto c = build_ansatz(h2(), ucc_generators(4, 2), 2);
  const auto json = c.summary_json();
  EXPECT_NE(json.find("\"parameter_count\": 34"), std::string::npos);
  EXPECT_NE(json.find("\"label\": \"d01_23\""), std::string::npos);
  EXPECT_NE(json.find("\"origin\": \"hamiltonian_layer\""), std::string::npos);
}
