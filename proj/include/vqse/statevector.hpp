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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "vqse/pauli.hpp"

namespace vqse {

inline constexpr int kMaxStateQubits = 20;
/// Norm drift beyond this is treated as a kernel bug.
inline constexpr double kNormTolerance = 1e-10;

/// Dense amplitude vector over n qubits. Basis index bit q is qubit q.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);
  /// Takes ownership of amplitudes; their count must be a power of two and
  /// their norm must be 1 within kNormTolerance.
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  /// Basis state from a bit string whose i-th character is qubit i, so
  /// "1000" on 4 qubits is index 1.
  static StateVector basis_state(int n_qubits, std::string_view bits);
  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  double norm_squared() const;

  /// s <- exp(-i angle P) s for a Pauli word P.
  void apply_pauli_exp(PauliWord word, double angle);

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Bit string for a basis index under the qubit-0-first convention.
std::string basis_label(int n_qubits, std::uint64_t index);
/// Inverse of basis_label; throws on length mismatch or non-binary chars.
std::uint64_t basis_index(int n_qubits, std::string_view bits);

/// exp(-i angle P) applied to a copy of s. P must carry coefficient +1.
StateVector apply_pauli_exp(const StateVector& s, const PauliTerm& p, double angle);

/// Σ_k c_k <s|P_k|s>. Requires a Hermitian sum over the same register.
double expectation(const StateVector& s, const PauliSum& h);

/// <a|b>.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2, the infinite-shot SWAP-test value.
double overlap_sq(const StateVector& a, const StateVector& b);

}  // namespace vqse
