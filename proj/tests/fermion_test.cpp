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

#include "vqse/fermion.hpp"

#include <algorithm>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "vqse/hamiltonian_io.hpp"
#include "vqse/statevector.hpp"

using namespace vqse;
using vqse::testing::kron_sum;

namespace {

PauliSum jw(int n, std::initializer_list<LadderOp> ops) {
  const std::vector<LadderOp> v(ops);
  return jordan_wigner(n, v);
}

PauliSum pauli(int n, std::initializer_list<std::pair<const char*, Complex>> terms) {
  std::vector<PauliTerm> out;
  for (const auto& [w, c] : terms) out.push_back(PauliTerm::from_string(n, w, c));
  return PauliSum(n, out);
}

const PauliSum& observable(const std::vector<SymmetryObservable>& all, SymmetryKind kind) {
  return std::find_if(all.begin(), all.end(), [&](const auto& o) { return o.kind == kind; })
      ->realization;
}

}  // namespace

TEST(jordan_wigner, number_operator) {
  EXPECT_EQ(jw(1, {create(0), annihilate(0)}), pauli(1, {{"I", 0.5}, {"Z0", -0.5}}));
}

TEST(jordan_wigner, hopping) {
  const auto h = jw(2, {create(0), annihilate(1)}) + jw(2, {create(1), annihilate(0)});
  EXPECT_EQ(h, pauli(2, {{"X0 X1", 0.5}, {"Y0 Y1", 0.5}}));
}

TEST(jordan_wigner, creation_image) {
  // a_2^dagger = Z0 Z1 (X2 - i Y2)/2.
  EXPECT_EQ(jw(3, {create(2)}), pauli(3, {{"Z0 Z1 X2", 0.5}, {"Z0 Z1 Y2", {0, -0.5}}}));
}

TEST(jordan_wigner, creation_fills_mode) {
  // a_1^dagger |00> = |01> with qubit 1 set.
  const auto m = to_dense(jw(2, {create(1)}));
  EXPECT_EQ(m(2, 0), Complex(1, 0));
}

TEST(jordan_wigner, index_out_of_range) {
  EXPECT_THROW(jw(2, {create(2)}), std::out_of_range);
  EXPECT_THROW(jw(2, {annihilate(-1)}), std::out_of_range);
}

TEST(jordan_wigner, canonical_anticommutation) {
  const int n = 4;
  const auto dim = std::size_t{1} << n;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const auto ap = kron_sum(jw(n, {annihilate(p)}));
      const auto aq = kron_sum(jw(n, {annihilate(q)}));
      const auto aq_dag = kron_sum(jw(n, {create(q)}));
      const Eigen::MatrixXcd mixed = ap * aq_dag + aq_dag * ap;
      const Eigen::MatrixXcd expected = p == q ? id : Eigen::MatrixXcd::Zero(dim, dim);
      ASSERT_LT((mixed - expected).cwiseAbs().maxCoeff(), 1e-14) << p << "," << q;
      ASSERT_LT((ap * aq + aq * ap).cwiseAbs().maxCoeff(), 1e-14) << p << "," << q;
    }
  }
}

TEST(ucc_generators, h2_counts) {
  const auto gens = ucc_generators(4, 2);
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(gens[0].excitation.label, "s0_2");
  EXPECT_EQ(gens[1].excitation.label, "s1_3");
  EXPECT_EQ(gens[2].excitation.label, "d01_23");
  EXPECT_EQ(gens[2].excitation.kind, ExcitationKind::Double);
  for (const auto& g : gens) {
    EXPECT_EQ(g.generator.adjoint(), g.generator * Complex(-1, 0)) << g.excitation.label;
  }
  // Double excitation is the familiar eight-word XXXY family.
  EXPECT_EQ(gens[2].generator.size(), 8u);
}

TEST(ucc_generators, two_spin_orbitals) {
  // Qubit 0 is alpha and qubit 1 is beta, so 0 -> 1 would flip the spin.
  EXPECT_TRUE(ucc_generators(2, 1).empty());
  // With one alpha electron only the 0 -> 2 hop survives.
  EXPECT_EQ(ucc_generators(4, 1).size(), 1u);
}

TEST(ucc_generators, counts_match_enumeration) {
  // Brute force over spin-preserving excitations of the lowest-ne reference.
  for (int n : {4, 6, 8}) {
    for (int ne = 1; ne < n; ++ne) {
      int singles = 0;
      int doubles = 0;
      for (int p = 0; p < ne; ++p) {
        for (int r = ne; r < n; ++r) singles += (p % 2) == (r % 2);
      }
      for (int p = 0; p < ne; ++p) {
        for (int q = p + 1; q < ne; ++q) {
          for (int r = ne; r < n; ++r) {
            for (int s = r + 1; s < n; ++s) doubles += (p % 2 + q % 2) == (r % 2 + s % 2);
          }
        }
      }
      const auto gens = ucc_generators(n, ne);
      ASSERT_EQ(gens.size(), static_cast<std::size_t>(singles + doubles)) << n << " " << ne;
    }
  }
}

TEST(ucc_generators, deterministic) {
  const auto a = ucc_generators(6, 2);
  const auto b = ucc_generators(6, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].excitation.label, b[i].excitation.label);
    EXPECT_EQ(a[i].generator, b[i].generator);
  }
}

TEST(ucc_generators, infeasible) {
  EXPECT_THROW(ucc_generators(4, -1), std::invalid_argument);
  EXPECT_THROW(ucc_generators(4, 4), std::invalid_argument);
}

TEST(symmetry, particle_number_examples) {
  const auto obs = symmetry_observables(4);
  const auto& n = observable(obs, SymmetryKind::ParticleNumber);
  EXPECT_NEAR(expectation(StateVector::basis_state(4, "0000"), n), 0.0, 1e-15);
  EXPECT_NEAR(expectation(StateVector::basis_state(4, "1100"), n), 2.0, 1e-15);
  const auto& sz = observable(obs, SymmetryKind::SpinZ);
  EXPECT_NEAR(expectation(StateVector::basis_state(4, "1100"), sz), 0.0, 1e-15);
  EXPECT_NEAR(expectation(StateVector::basis_state(4, "1010"), sz), 1.0, 1e-15);
}

TEST(symmetry, s_squared_two_electron_block) {
  const auto obs = symmetry_observables(4);
  const auto s2 = to_dense(observable(obs, SymmetryKind::SpinSquared));
  // N = 2, S_z = 0: one alpha (even qubit) and one beta (odd qubit) electron.
  std::vector<int> block;
  for (int i = 0; i < 16; ++i) {
    const int alpha = ((i >> 0) & 1) + ((i >> 2) & 1);
    const int beta = ((i >> 1) & 1) + ((i >> 3) & 1);
    if (alpha == 1 && beta == 1) block.push_back(i);
  }
  ASSERT_EQ(block.size(), 4u);
  Eigen::MatrixXcd sub(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) sub(a, b) = s2(block[a], block[b]);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(sub);
  const Eigen::Vector4d expected(0, 0, 0, 2);
  EXPECT_LT((eig.eigenvalues() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(symmetry, conserved_by_h2) {
  const auto file = parse_hamiltonian_file(vqse::testing::fixture("H2_r0.74.ham"));
  const auto h = kron_sum(file.hamiltonian);
  for (const auto& o : symmetry_observables(4)) {
    const auto m = kron_sum(o.realization);
    EXPECT_LT((h * m - m * h).cwiseAbs().maxCoeff(), 1e-8) << to_string(o.kind);
  }
}

TEST(symmetry, names_and_errors) {
  for (auto k : {SymmetryKind::ParticleNumber, SymmetryKind::SpinZ, SymmetryKind::SpinSquared}) {
    EXPECT_EQ(symmetry_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(symmetry_kind_from_string("parity"), std::invalid_argument);
  EXPECT_THROW(symmetry_observables(3), std::invalid_argument);
}
