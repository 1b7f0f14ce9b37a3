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

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace vqse {

std::string to_string(GroupOrigin origin) {
  switch (origin) {
    case GroupOrigin::HamiltonianLayer: return "hamiltonian_layer";
    case GroupOrigin::UccSingle: return "ucc_single";
    case GroupOrigin::UccDouble: return "ucc_double";
    case GroupOrigin::Custom: return "custom";
  }
  return "unknown";
}

AnsatzCircuit::AnsatzCircuit(int n_qubits, int depth,
                             std::vector<ParameterGroup> groups)
    : n_qubits_(n_qubits), depth_(depth), groups_(std::move(groups)) {
  if (depth < 1) throw std::invalid_argument("ansatz depth must be >= 1");
  for (std::size_t l = 0; l < groups_.size(); ++l) {
    if (groups_[l].parameter != static_cast<int>(l)) {
      throw std::invalid_argument("parameter groups must be indexed in order");
    }
    for (const auto& t : groups_[l].terms) {
      if (t.word.span() > n_qubits_) {
        throw std::invalid_argument("group " + groups_[l].label +
                                    " acts outside the register");
      }
    }
  }
}

void AnsatzCircuit::check_theta(std::span<const double> theta) const {
  if (theta.size() != groups_.size()) {
    throw std::invalid_argument("theta has " + std::to_string(theta.size()) +
                                " entries, circuit expects " +
                                std::to_string(groups_.size()));
  }
}

void AnsatzCircuit::apply_in_place(std::span<const double> theta,
                                   StateVector& state) const {
  check_theta(theta);
  if (state.n_qubits() != n_qubits_) {
    throw std::invalid_argument("state register does not match the circuit");
  }
  for (const auto& group : groups_) {
    const double angle = theta[static_cast<std::size_t>(group.parameter)];
    for (const auto& term : group.terms) {
      state.apply_pauli_exp(term.word, angle * term.coefficient);
    }
  }
  // Assert-only: drift means a kernel bug.
  if (std::abs(state.norm_squared() - 1.0) > kNormTolerance) {
    throw std::runtime_error("ansatz application broke normalization");
  }
}

std::string AnsatzCircuit::summary_json() const {
  nlohmann::ordered_json j;
  j["n_qubits"] = n_qubits_;
  j["depth"] = depth_;
  j["parameter_count"] = groups_.size();
  auto& groups = j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : groups_) {
    groups.push_back({{"parameter", g.parameter},
                      {"layer", g.layer},
                      {"origin", to_string(g.origin)},
                      {"label", g.label},
                      {"terms", g.terms.size()}});
  }
  return j.dump(2);
}

AnsatzCircuit build_ansatz(const PauliSum& hamiltonian,
                           std::span<const UccGenerator> generators, int depth) {
  if (depth < 1) throw std::invalid_argument("ansatz depth must be >= 1");
  if (!hamiltonian.is_hermitian()) {
    throw std::invalid_argument("ansatz Hamiltonian layer needs a Hermitian sum");
  }
  std::vector<const PauliTerm*> words;
  for (const auto& t : hamiltonian.terms()) {
    if (!t.word.is_identity()) words.push_back(&t);
  }
  if (words.empty()) {
    throw std::invalid_argument("Hamiltonian has no non-identity words");
  }
  const int n = hamiltonian.n_qubits();
  std::vector<ParameterGroup> groups;
  for (int layer = 0; layer < depth; ++layer) {
    for (const PauliTerm* t : words) {
      ParameterGroup g;
      g.parameter = static_cast<int>(groups.size());
      g.origin = GroupOrigin::HamiltonianLayer;
      g.layer = layer;
      g.label = "h:" + t->word.to_string();
      g.terms.push_back({t->coefficient.real(), t->word});
      groups.push_back(std::move(g));
    }
    for (const auto& gen : generators) {
      if (gen.generator.n_qubits() != n) {
        throw std::invalid_argument("UCC generator register mismatch");
      }
      ParameterGroup g;
      g.parameter = static_cast<int>(groups.size());
      g.origin = gen.excitation.kind == ExcitationKind::Single
                     ? GroupOrigin::UccSingle
                     : GroupOrigin::UccDouble;
      g.layer = layer;
      g.label = gen.excitation.label;
      // G = Σ i c_k P_k, so exp(θG) = ∏ exp(-i θ (-c_k) P_k) for commuting P_k.
      for (const auto& t : gen.generator.terms()) {
        if (std::abs(t.coefficient.real()) > kHermitianTolerance) {
          throw std::invalid_argument("UCC generator " + gen.excitation.label +
                                      " is not anti-Hermitian");
        }
        g.terms.push_back({-t.coefficient.imag(), t.word});
      }
      groups.push_back(std::move(g));
    }
  }
  return AnsatzCircuit(n, depth, std::move(groups));
}

StateVector apply(const AnsatzCircuit& circuit, std::span<const double> theta,
                  const StateVector& input) {
  StateVector out = input;
  circuit.apply_in_place(theta, out);
  return out;
}

}  // namespace vqse
