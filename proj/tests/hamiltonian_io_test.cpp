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

#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "vqse/errors.hpp"

using namespace vqse;
namespace fs = std::filesystem;

TEST(parse_hamiltonian, minimal) {
  const auto f = parse_hamiltonian_text("# n_qubits 1\n1.0 Z0\n");
  EXPECT_EQ(f.hamiltonian, PauliSum(1, {PauliTerm::from_string(1, "Z0")}));
  EXPECT_EQ(f.metadata("n_qubits"), "1");
  EXPECT_EQ(f.molecule(), "");
  EXPECT_FALSE(f.bond_length().has_value());
}

TEST(parse_hamiltonian, header_and_terms) {
  const auto f = parse_hamiltonian_text(
      "# molecule H2\n# bond_length_angstrom 0.74\n# n_qubits 2\n"
      "-0.5 I\n0.25 Z0 Z1\n# a comment\n\n(0.1,0) X0 X1\n0.25 Z0 Z1\n");
  EXPECT_EQ(f.molecule(), "H2");
  EXPECT_EQ(f.bond_length(), 0.74);
  ASSERT_EQ(f.hamiltonian.size(), 3u);
  EXPECT_EQ(f.hamiltonian.identity_coefficient(), Complex(-0.5, 0));
  EXPECT_EQ(f.hamiltonian.terms()[2].coefficient, Complex(0.5, 0));
  EXPECT_EQ(f.hamiltonian.metadata().at("molecule"), "H2");
}

TEST(parse_hamiltonian, bad_word_names_line) {
  try {
    parse_hamiltonian_text("# n_qubits 4\n1.0 Z0\n0.5 Q3\n", "bad.ham");
    FAIL() << "expected a parse error";
  } catch (const FixtureError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.ham:3:"), std::string::npos) << e.what();
  }
}

TEST(parse_hamiltonian, errors) {
  EXPECT_THROW(parse_hamiltonian_text("1.0 Z0\n"), FixtureError);
  EXPECT_THROW(parse_hamiltonian_text("# n_qubits 0\n"), FixtureError);
  EXPECT_THROW(parse_hamiltonian_text("# n_qubits 2\n# n_qubits 2\n"), FixtureError);
  EXPECT_THROW(parse_hamiltonian_text("# n_qubits 2\nabc Z0\n"), FixtureError);
  EXPECT_THROW(parse_hamiltonian_text("# n_qubits 2\n1.0\n"), FixtureError);
  EXPECT_THROW(parse_hamiltonian_text("# n_qubits 2\n1.0 Z2\n"), FixtureError);
  EXPECT_THROW(parse_hamiltonian_text("# n_qubits 1\n(0,1) Y0\n"), FixtureError);
  EXPECT_THROW(parse_hamiltonian_file("/nonexistent/file.ham"), FixtureError);
}

TEST(parse_hamiltonian, cancelling_imaginary_parts_accepted) {
  const auto f = parse_hamiltonian_text("# n_qubits 1\n(1,0.5) X0\n(0,-0.5) X0\n");
  EXPECT_TRUE(f.hamiltonian.is_hermitian());
  EXPECT_EQ(f.hamiltonian.size(), 1u);
}

TEST(fixtures, round_trip_and_manifest) {
  const fs::path dir(VQSE_FIXTURE_DIR);
  std::istringstream manifest(read_file(dir / "MANIFEST"));
  std::string digest;
  std::string name;
  int count = 0;
  int h2_sweep = 0;
  while (manifest >> digest >> name) {
    const std::string text = read_file(dir / name);
    const auto f = parse_hamiltonian_text(text, name);
    EXPECT_EQ(f.checksum, digest) << name;
    EXPECT_EQ(render_hamiltonian(f), text) << name;
    EXPECT_EQ(f.hamiltonian.n_qubits(), 4) << name;
    EXPECT_TRUE(f.bond_length().has_value()) << name;
    if (f.molecule() == "H2" && name != "H2_r0.74.ham") ++h2_sweep;
    ++count;
  }
  EXPECT_EQ(count, 47);
  EXPECT_EQ(h2_sweep, 25);
}

TEST(sha256, known_vector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(write_file_atomic, replaces_contents) {
  const auto dir = fs::temp_directory_path() / "vqse_io_test";
  fs::remove_all(dir);
  const auto path = dir / "nested" / "out.txt";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  EXPECT_EQ(read_file(path), "second");
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
  fs::remove_all(dir);
}
