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

#include "vqse/hamiltonian_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "vqse/errors.hpp"

namespace vqse {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() && !token.empty();
}

bool parse_coefficient(std::string_view token, Complex& out) {
  if (token.size() >= 2 && token.front() == '(' && token.back() == ')') {
    const auto inner = token.substr(1, token.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) return false;
    double re = 0.0;
    double im = 0.0;
    if (!parse_double(trim(inner.substr(0, comma)), re) ||
        !parse_double(trim(inner.substr(comma + 1)), im)) {
      return false;
    }
    out = {re, im};
    return true;
  }
  double re = 0.0;
  if (!parse_double(token, re)) return false;
  out = {re, 0.0};
  return true;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw FixtureError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::optional<std::string> HamiltonianFile::metadata(std::string_view key) const {
  for (const auto& [k, v] : header) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string HamiltonianFile::molecule() const { return metadata("molecule").value_or(""); }

std::optional<double> HamiltonianFile::bond_length() const {
  const auto text = metadata("bond_length_angstrom");
  double value = 0.0;
  if (!text || !parse_double(*text, value)) return std::nullopt;
  return value;
}

HamiltonianFile parse_hamiltonian_text(std::string_view text, std::string source) {
  HamiltonianFile file;
  file.source = std::move(source);
  file.checksum = sha256_hex(text);

  struct PendingTerm {
    std::size_t line;
    Complex coefficient;
    std::string word;
  };
  std::vector<PendingTerm> pending;
  std::optional<int> n_qubits;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      const auto space = body.find_first_of(" \t");
      if (space == std::string_view::npos) continue;  // bare comment
      std::string key(body.substr(0, space));
      std::string value(trim(body.substr(space)));
      if (key == "n_qubits") {
        int n = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc{} || ptr != value.data() + value.size() || n < 1 || n > 64) {
          fail(file.source, line_no, "invalid n_qubits '" + value + "'");
        }
        if (n_qubits) fail(file.source, line_no, "n_qubits declared twice");
        n_qubits = n;
      }
      file.header.emplace_back(std::move(key), std::move(value));
      continue;
    }
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      fail(file.source, line_no, "expected '<coefficient> <pauli word>'");
    }
    Complex c;
    if (!parse_coefficient(line.substr(0, space), c)) {
      fail(file.source, line_no,
           "invalid coefficient '" + std::string(line.substr(0, space)) + "'");
    }
    pending.push_back({line_no, c, std::string(trim(line.substr(space)))});
  }

  if (!n_qubits) throw FixtureError(file.source + ": missing '# n_qubits' metadata");
  std::vector<PauliTerm> terms;
  terms.reserve(pending.size());
  for (const auto& p : pending) {
    try {
      terms.push_back(PauliTerm::from_string(*n_qubits, p.word, p.coefficient));
    } catch (const std::exception& e) {
      fail(file.source, p.line, e.what());
    }
  }
  file.hamiltonian = PauliSum(*n_qubits, std::move(terms));
  if (!file.hamiltonian.is_hermitian()) {
    throw FixtureError(file.source + ": non-Hermitian coefficients (imaginary parts remain)");
  }
  for (const auto& [k, v] : file.header) file.hamiltonian.set_metadata(k, v);
  return file;
}

HamiltonianFile parse_hamiltonian_file(const std::filesystem::path& path) {
  return parse_hamiltonian_text(read_file(path), path.string());
}

std::string render_hamiltonian(const HamiltonianFile& file) {
  std::string out;
  for (const auto& [k, v] : file.header) out += "# " + k + " " + v + "\n";
  for (const auto& t : file.hamiltonian.terms()) {
    PauliTerm real = t;
    real.coefficient = {t.coefficient.real(), 0.0};
    out += render_term(real) + "\n";
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace vqse
