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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "vqse/pauli.hpp"

namespace vqse {

/// a_p^dagger (creation) or a_p.
struct LadderOp {
  int mode = 0;
  bool creation = false;
};

inline LadderOp create(int mode) { return {mode, true}; }
inline LadderOp annihilate(int mode) { return {mode, false}; }

/// Jordan-Wigner image of an ordered product of ladder operators (leftmost
/// factor first). a_p^dagger maps to (X_p - i Y_p)/2 with Z on every qubit
/// below p, so an occupied mode is |1>.
PauliSum jordan_wigner(int n_qubits, std::span<const LadderOp> product);

enum class ExcitationKind { Single, Double };

/// Spin-preserving excitation of the reference determinant. Spin-orbitals
/// alternate alpha (even qubit) and beta (odd qubit).
struct ExcitationGenerator {
  ExcitationKind kind = ExcitationKind::Single;
  std::vector<int> occupied;  // p (single) or p < q (double)
  std::vector<int> virtuals;  // r (single) or r < s (double)
  std::string label;
};

struct UccGenerator {
  ExcitationGenerator excitation;
  /// JW image of T - T^dagger; anti-Hermitian, canonical.
  PauliSum generator;
};

/// All spin-preserving singles then doubles over the reference determinant
/// with the lowest `n_electrons` spin-orbitals occupied, in lexicographic
/// order.
std::vector<UccGenerator> ucc_generators(int n_qubits, int n_electrons);

enum class SymmetryKind { ParticleNumber, SpinZ, SpinSquared };

std::string to_string(SymmetryKind kind);
SymmetryKind symmetry_kind_from_string(const std::string& name);

struct SymmetryObservable {
  SymmetryKind kind;
  PauliSum realization;
};

/// N, S_z and S^2 in that order. Requires an even qubit count.
std::vector<SymmetryObservable> symmetry_observables(int n_qubits);

}  // namespace vqse
