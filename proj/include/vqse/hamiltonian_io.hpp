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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vqse/pauli.hpp"

namespace vqse {

/// A parsed Hamiltonian file.
///
/// Format: UTF-8 text. `# key value` lines carry metadata (`molecule`,
/// `bond_length_angstrom`, `n_qubits`, ...); data lines are
/// `<decimal coefficient> <word>` where the word is space separated
/// `<letter><index>` tokens or the single token `I`. A coefficient may be
/// written `(re,im)`; anything with a surviving imaginary part is rejected.
struct HamiltonianFile {
  std::string source;
  /// Metadata lines in file order.
  std::vector<std::pair<std::string, std::string>> header;
  PauliSum hamiltonian{1};
  /// Lowercase hex SHA-256 of the file bytes.
  std::string checksum;

  std::optional<std::string> metadata(std::string_view key) const;
  std::string molecule() const;
  std::optional<double> bond_length() const;
};

/// Throws FixtureError naming the source and line on malformed input.
HamiltonianFile parse_hamiltonian_text(std::string_view text, std::string source = "<memory>");
HamiltonianFile parse_hamiltonian_file(const std::filesystem::path& path);

/// Header lines followed by one canonical `render_term` line per term.
std::string render_hamiltonian(const HamiltonianFile& file);

std::string sha256_hex(std::string_view bytes);

/// Reads a whole file; throws FixtureError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace vqse
