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

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vqse {
namespace {

void check_state_qubits(int n) {
  if (n < 1 || n > kMaxStateQubits) {
    throw std::invalid_argument("state vector qubit count must lie in [1, " +
                                std::to_string(kMaxStateQubits) + "], got " +
                                std::to_string(n));
  }
}

void check_same_register(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string("qubit-count mismatch in ") + what +
                                ": " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

double parity_sign(std::uint64_t index, std::uint64_t z_mask) {
  return (std::popcount(index & z_mask) & 1) ? -1.0 : 1.0;
}

// i^{ny} for a word's Y count.
Complex y_phase(int y_count) {
  switch (y_count & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_state_qubits(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_state_qubits(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count " +
                                std::to_string(amplitudes_.size()) +
                                " does not match 2^" + std::to_string(n_qubits));
  }
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

std::uint64_t basis_index(int n_qubits, std::string_view bits) {
  if (bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("bit string '" + std::string(bits) +
                                "' has length " + std::to_string(bits.size()) +
                                ", expected " + std::to_string(n_qubits));
  }
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] == '1') {
      index |= std::uint64_t{1} << q;
    } else if (bits[q] != '0') {
      throw std::invalid_argument("bit string '" + std::string(bits) +
                                  "' contains a non-binary character");
    }
  }
  return index;
}

std::string basis_label(int n_qubits, std::uint64_t index) {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((index >> q) & 1u) out[static_cast<std::size_t>(q)] = '1';
  }
  return out;
}

StateVector StateVector::basis_state(int n_qubits, std::string_view bits) {
  check_state_qubits(n_qubits);
  return basis_state(n_qubits, basis_index(n_qubits, bits));
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " outside register of " + std::to_string(n_qubits) +
                            " qubits");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

void StateVector::apply_pauli_exp(PauliWord word, double angle) {
  if (word.span() > n_qubits_) {
    throw std::invalid_argument("Pauli word " + word.to_string() +
                                " exceeds register of " +
                                std::to_string(n_qubits_) + " qubits");
  }
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const std::uint64_t x = word.x_mask();
  const std::uint64_t z = word.z_mask();
  const std::uint64_t dim = amplitudes_.size();

  if (x == 0) {
    // Diagonal word: each amplitude picks up exp(-i angle (+-1)).
    const Complex plus{c, -s};
    const Complex minus{c, s};
    for (std::uint64_t b = 0; b < dim; ++b) {
      amplitudes_[b] *= parity_sign(b, z) > 0 ? plus : minus;
    }
    return;
  }

  // P|b> = i^{ny} (-1)^{|b & z|} |b ^ x>; update each (b, b ^ x) pair once.
  const Complex minus_i_sin = Complex{0.0, -s} * y_phase(word.y_count());
  const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (b & pivot) continue;
    const std::uint64_t partner = b ^ x;
    const Complex a0 = amplitudes_[b];
    const Complex a1 = amplitudes_[partner];
    // (P a)[partner] = phase(b) a0, (P a)[b] = phase(partner) a1.
    amplitudes_[b] = c * a0 + minus_i_sin * parity_sign(partner, z) * a1;
    amplitudes_[partner] = c * a1 + minus_i_sin * parity_sign(b, z) * a0;
  }
}

StateVector apply_pauli_exp(const StateVector& s, const PauliTerm& p, double angle) {
  check_same_register(s.n_qubits(), p.n_qubits, "apply_pauli_exp");
  if (std::abs(p.coefficient - Complex{1.0, 0.0}) > kPruneTolerance) {
    throw std::invalid_argument(
        "apply_pauli_exp requires a unit coefficient; fold it into the angle");
  }
  StateVector out = s;
  out.apply_pauli_exp(p.word, angle);
  return out;
}

double expectation(const StateVector& s, const PauliSum& h) {
  check_same_register(s.n_qubits(), h.n_qubits(), "expectation");
  if (!h.is_hermitian()) {
    throw std::invalid_argument("expectation requires a Hermitian PauliSum");
  }
  const auto amps = s.amplitudes();
  Complex total{0.0, 0.0};
  for (const auto& term : h.terms()) {
    const std::uint64_t x = term.word.x_mask();
    const std::uint64_t z = term.word.z_mask();
    Complex acc{0.0, 0.0};
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      acc += std::conj(amps[b ^ x]) * parity_sign(b, z) * amps[b];
    }
    total += term.coefficient * y_phase(term.word.y_count()) * acc;
  }
  if (std::abs(total.imag()) > 1e-10) {
    throw std::runtime_error("expectation has imaginary residue " +
                             std::to_string(total.imag()));
  }
  return total.real();
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  check_same_register(a.n_qubits(), b.n_qubits(), "inner_product");
  Complex total{0.0, 0.0};
  const auto aa = a.amplitudes();
  const auto bb = b.amplitudes();
  for (std::size_t i = 0; i < aa.size(); ++i) total += std::conj(aa[i]) * bb[i];
  return total;
}

double overlap_sq(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

}  // namespace vqse
