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

#include <array>
#include <stdexcept>

namespace vqse {
namespace {

PauliSum ladder_image(int n_qubits, LadderOp op) {
  if (op.mode < 0 || op.mode >= n_qubits) {
    throw std::out_of_range("fermionic mode " + std::to_string(op.mode) +
                            " outside register of " + std::to_string(n_qubits) +
                            " qubits");
  }
  std::uint64_t z_string = (std::uint64_t{1} << op.mode) - 1;
  const PauliWord x = PauliWord::single(op.mode, PauliLetter::X);
  const PauliWord y = PauliWord::single(op.mode, PauliLetter::Y);
  const double y_sign = op.creation ? -1.0 : 1.0;
  return PauliSum(n_qubits,
                  {PauliTerm(n_qubits, PauliWord(x.x_mask(), z_string), 0.5),
                   PauliTerm(n_qubits, PauliWord(y.x_mask(), y.z_mask() | z_string),
                             Complex{0.0, 0.5 * y_sign})});
}

bool same_spin(int a, int b) { return (a % 2) == (b % 2); }

PauliSum anti_hermitian_part(int n_qubits, std::span<const LadderOp> excitation) {
  const PauliSum t = jordan_wigner(n_qubits, excitation);
  return t - t.adjoint();
}

// n_p for one spin-orbital.
PauliSum number_op(int n_qubits, int mode) {
  const std::array ops{create(mode), annihilate(mode)};
  return jordan_wigner(n_qubits, ops);
}

}  // namespace

PauliSum jordan_wigner(int n_qubits, std::span<const LadderOp> product) {
  PauliSum out(n_qubits, {PauliTerm::identity(n_qubits)});
  for (const auto& op : product) out = out * ladder_image(n_qubits, op);
  return out;
}

std::vector<UccGenerator> ucc_generators(int n_qubits, int n_electrons) {
  if (n_electrons < 0 || n_electrons >= n_qubits) {
    throw std::invalid_argument("infeasible electron count " +
                                std::to_string(n_electrons) + " for " +
                                std::to_string(n_qubits) + " spin-orbitals");
  }
  std::vector<UccGenerator> out;
  for (int p = 0; p < n_electrons; ++p) {
    for (int r = n_electrons; r < n_qubits; ++r) {
      if (!same_spin(p, r)) continue;
      const std::array ops{create(r), annihilate(p)};
      ExcitationGenerator ex{ExcitationKind::Single, {p}, {r},
                             "s" + std::to_string(p) + "_" + std::to_string(r)};
      out.push_back({std::move(ex), anti_hermitian_part(n_qubits, ops)});
    }
  }
  for (int p = 0; p < n_electrons; ++p) {
    for (int q = p + 1; q < n_electrons; ++q) {
      for (int r = n_electrons; r < n_qubits; ++r) {
        for (int s = r + 1; s < n_qubits; ++s) {
          const int alpha_in = (p % 2 == 0) + (q % 2 == 0);
          const int alpha_out = (r % 2 == 0) + (s % 2 == 0);
          if (alpha_in != alpha_out) continue;
          const std::array ops{create(r), create(s), annihilate(q), annihilate(p)};
          ExcitationGenerator ex{
              ExcitationKind::Double, {p, q}, {r, s},
              "d" + std::to_string(p) + std::to_string(q) + "_" +
                  std::to_string(r) + std::to_string(s)};
          out.push_back({std::move(ex), anti_hermitian_part(n_qubits, ops)});
        }
      }
    }
  }
  return out;
}

std::string to_string(SymmetryKind kind) {
  switch (kind) {
    case SymmetryKind::ParticleNumber: return "particle_number";
    case SymmetryKind::SpinZ: return "s_z";
    case SymmetryKind::SpinSquared: return "s_squared";
  }
  return "unknown";
}

SymmetryKind symmetry_kind_from_string(const std::string& name) {
  if (name == "particle_number" || name == "N") return SymmetryKind::ParticleNumber;
  if (name == "s_z") return SymmetryKind::SpinZ;
  if (name == "s_squared") return SymmetryKind::SpinSquared;
  throw std::invalid_argument("unknown symmetry observable '" + name + "'");
}

std::vector<SymmetryObservable> symmetry_observables(int n_qubits) {
  if (n_qubits % 2 != 0) {
    throw std::invalid_argument(
        "symmetry observables need an even qubit count (alpha/beta pairs), got " +
        std::to_string(n_qubits));
  }
  PauliSum number(n_qubits);
  PauliSum spin_z(n_qubits);
  PauliSum s_plus(n_qubits);
  for (int orbital = 0; orbital < n_qubits / 2; ++orbital) {
    const int alpha = 2 * orbital;
    const int beta = alpha + 1;
    const PauliSum n_alpha = number_op(n_qubits, alpha);
    const PauliSum n_beta = number_op(n_qubits, beta);
    number = number + n_alpha + n_beta;
    spin_z = spin_z + (n_alpha - n_beta) * Complex{0.5, 0.0};
    const std::array raise{create(alpha), annihilate(beta)};
    s_plus = s_plus + jordan_wigner(n_qubits, raise);
  }
  const PauliSum s_minus = s_plus.adjoint();
  const PauliSum s_squared =
      spin_z * spin_z + (s_plus * s_minus + s_minus * s_plus) * Complex{0.5, 0.0};
  return {{SymmetryKind::ParticleNumber, number},
          {SymmetryKind::SpinZ, spin_z},
          {SymmetryKind::SpinSquared, s_squared}};
}

}  // namespace vqse
