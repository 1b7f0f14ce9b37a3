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

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace vqse {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Largest register realized as a dense matrix.
inline constexpr int kMaxDenseQubits = 12;
/// Coefficients below this magnitude are dropped during canonicalization.
inline constexpr double kPruneTolerance = 1e-12;
/// Imaginary residue tolerated on a Hermitian sum's coefficients.
inline constexpr double kHermitianTolerance = 1e-12;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter letter);

/// A tensor product of single-qubit Paulis without a coefficient.
///
/// Stored as an (x, z) bit-mask pair: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
/// Bit q of each mask is qubit q, which is also bit q of a basis-state index
/// and the q-th letter from the left in a rendering.
class PauliWord {
 public:
  constexpr PauliWord() = default;
  constexpr PauliWord(std::uint64_t x_mask, std::uint64_t z_mask)
      : x_(x_mask), z_(z_mask) {}

  static PauliWord single(int qubit, PauliLetter letter);

  constexpr std::uint64_t x_mask() const { return x_; }
  constexpr std::uint64_t z_mask() const { return z_; }
  PauliLetter letter(int qubit) const;
  int weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  /// Number of Y letters; P = i^{y_count} X^x Z^z.
  int y_count() const;
  /// Highest qubit index touched plus one (0 for the identity).
  int span() const;
  bool commutes_with(PauliWord other) const;

  /// Space separated `<letter><index>` tokens, or `I` for the identity.
  std::string to_string() const;

  friend constexpr bool operator==(PauliWord, PauliWord) = default;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Canonical word order: fewer non-identity letters first, then
/// lexicographic over the (qubit, letter) token sequence.
bool canonical_less(PauliWord a, PauliWord b);

struct PauliTerm {
  int n_qubits = 1;
  PauliWord word;
  Complex coefficient{1.0, 0.0};

  PauliTerm() = default;
  PauliTerm(int n, PauliWord w, Complex c = {1.0, 0.0});

  /// Parses a word such as "X0 Y1" or "I".
  static PauliTerm from_string(int n_qubits, std::string_view word,
                               Complex coefficient = {1.0, 0.0});
  static PauliTerm identity(int n_qubits, Complex coefficient = {1.0, 0.0});
};

/// Canonical product a·b including the accumulated {±1, ±i} phase.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// `<coeff> <word>` using the shortest round-trip decimal for the real part.
/// Throws if the coefficient carries an imaginary part.
std::string render_term(const PauliTerm& term);
/// Shortest round-trip decimal rendering.
std::string format_real(double value);

/// Weighted sum of Pauli words over a common register, always canonical:
/// words are unique, sorted by canonical_less, and |c| < kPruneTolerance
/// terms are dropped.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits = 1);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms,
           std::map<std::string, std::string> metadata = {});

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<std::string, std::string>& metadata() const {
    return metadata_;
  }
  void set_metadata(std::string key, std::string value);

  bool is_hermitian(double tol = kHermitianTolerance) const;
  /// Coefficient of the identity word (0 when absent).
  Complex identity_coefficient() const;
  PauliSum adjoint() const;

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator-(const PauliSum& other) const;
  PauliSum operator*(const PauliSum& other) const;
  PauliSum operator*(Complex scale) const;

  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
  std::map<std::string, std::string> metadata_;
};

/// Combines duplicate words, prunes dust and sorts into canonical order.
std::vector<PauliTerm> canonicalize(int n_qubits, std::vector<PauliTerm> terms);

/// Σ_k c_k ⊗ P_k as a 2^n × 2^n matrix. Throws std::invalid_argument when
/// n_qubits exceeds kMaxDenseQubits.
DenseMatrix to_dense(const PauliSum& sum);
DenseMatrix to_dense(const PauliTerm& term);

struct StructureReport {
  std::size_t term_count = 0;
  bool hermitian = true;
  bool has_identity = false;
  /// locality_histogram[w] = number of words with w non-identity letters.
  std::vector<std::size_t> locality_histogram;
  double max_abs_imag = 0.0;
  std::string to_string() const;
};

StructureReport expectation_structure_check(const PauliSum& sum);

}  // namespace vqse
