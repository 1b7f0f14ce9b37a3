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

#include "vqse/fermion.hpp"
#include "vqse/pauli.hpp"
#include "vqse/statevector.hpp"

namespace vqse {

enum class GroupOrigin { HamiltonianLayer, UccSingle, UccDouble, Custom };

std::string to_string(GroupOrigin origin);

struct RotationTerm {
  double coefficient = 0.0;
  PauliWord word;
};

/// The exponentials sharing one variational parameter:
/// ∏_k exp(-i θ c_k P_k), applied in stored order.
struct ParameterGroup {
  int parameter = 0;
  GroupOrigin origin = GroupOrigin::Custom;
  int layer = 0;
  std::string label;
  std::vector<RotationTerm> terms;
};

/// Ordered product of parameter groups realizing U(θ).
class AnsatzCircuit {
 public:
  /// Groups must be indexed 0..size-1 in order and act on n_qubits.
  AnsatzCircuit(int n_qubits, int depth, std::vector<ParameterGroup> groups);

  int n_qubits() const { return n_qubits_; }
  int depth() const { return depth_; }
  std::size_t parameter_count() const { return groups_.size(); }
  const std::vector<ParameterGroup>& groups() const { return groups_; }

  /// Applies U(θ) to `state` in place.
  void apply_in_place(std::span<const double> theta, StateVector& state) const;

  /// JSON summary: parameter count, depth, per-group origin and term count.
  std::string summary_json() const;

 private:
  void check_theta(std::span<const double> theta) const;

  int n_qubits_;
  int depth_;
  std::vector<ParameterGroup> groups_;
};

/// Per layer: one group per non-identity Hamiltonian word (coefficient
/// folded in), then one group per UCC generator; repeated `depth` times with
/// fresh parameters.
AnsatzCircuit build_ansatz(const PauliSum& hamiltonian,
                           std::span<const UccGenerator> generators, int depth);

StateVector apply(const AnsatzCircuit& circuit, std::span<const double> theta,
                  const StateVector& input);

}  // namespace vqse
