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

// Command line driver: `run`, `spectrum` and `validate`.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vqse/eigensolvers.hpp"
#include "vqse/errors.hpp"
#include "vqse/hamiltonian_io.hpp"
#include "vqse/runner.hpp"

namespace fs = std::filesystem;
using namespace vqse;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitFixture = 3;
constexpr int kExitNumerical = 4;

int run_command(const std::string& config_path,
                const std::map<std::string, std::string>& overrides) {
  ExperimentConfig config = load_experiment_config(config_path);
  for (const auto& [key, value] : overrides) apply_config_setting(config, key, value);
  const auto records = run_sweep(config);
  for (const auto& row : summarize(records)) {
    std::cout << row.molecule << " r=" << format_real(row.bond_length)
              << " prescreen=" << row.prescreen_iters << "  <1e-2: " << row.under_1e2
              << "  <1e-3: " << row.under_1e3 << "  max log10 err: " << row.max_log10_error
              << "\n";
  }
  std::cout << "wrote " << resolve_output_dir(config).string() << "\n";
  return 0;
}

int spectrum_command(const std::string& path) {
  const auto file = parse_hamiltonian_file(path);
  const auto spectrum = exact_spectrum(file.hamiltonian);
  std::cout << "# " << file.source << "  sha256 " << file.checksum << "\n"
            << "# max residual " << spectrum.max_residual << "\n";
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    std::cout << i << " " << format_real(spectrum.eigenvalues[i]) << "\n";
  }
  return 0;
}

std::map<std::string, std::string> read_manifest(const fs::path& dir) {
  std::map<std::string, std::string> out;
  const auto path = dir / "MANIFEST";
  if (!fs::exists(path)) return out;
  std::istringstream in(read_file(path));
  std::string digest;
  std::string name;
  while (in >> digest >> name) out[name] = digest;
  return out;
}

// Returns the number of problems found in one file.
int validate_file(const fs::path& path, const std::map<std::string, std::string>& manifest) {
  int problems = 0;
  auto report = [&](const std::string& what) {
    std::cout << path.string() << ": " << what << "\n";
    ++problems;
  };
  try {
    const std::string text = read_file(path);
    const auto file = parse_hamiltonian_text(text, path.string());
    if (file.molecule().empty()) report("missing '# molecule' metadata");
    if (!file.bond_length()) report("missing '# bond_length_angstrom' metadata");
    if (file.hamiltonian.empty()) report("no terms");
    if (render_hamiltonian(file) != text) report("not in canonical form (render differs)");
    if (const auto it = manifest.find(path.filename().string());
        it != manifest.end() && it->second != file.checksum) {
      report("checksum differs from MANIFEST");
    }
    const auto s = expectation_structure_check(file.hamiltonian);
    if (!s.hermitian) report("non-Hermitian");
  } catch (const std::exception& e) {
    std::cout << e.what() << "\n";
    ++problems;
  }
  return problems;
}

int validate_command(const std::string& target) {
  std::vector<fs::path> files;
  std::map<std::string, std::string> manifest;
  if (fs::is_directory(target)) {
    for (const auto& entry : fs::directory_iterator(target)) {
      if (entry.path().extension() == ".ham") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    manifest = read_manifest(target);
    for (const auto& [name, digest] : manifest) {
      if (!fs::exists(fs::path(target) / name)) {
        std::cout << target << ": MANIFEST lists missing file " << name << "\n";
        return kExitFixture;
      }
    }
  } else if (fs::exists(target)) {
    files.push_back(target);
  } else {
    std::cout << target << ": no such file or directory\n";
    return kExitFixture;
  }
  int problems = 0;
  for (const auto& f : files) problems += validate_file(f, manifest);
  std::cout << files.size() << " file(s) checked, " << problems << " problem(s)\n";
  return problems == 0 ? 0 : kExitFixture;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational state eigensolver workbench with SSVQE prescreening"};
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> overrides;
  auto* run = app.add_subcommand("run", "Run a bond-length / prescreen sweep from a config file");
  run->add_option("config", config_path, "Experiment config file (key = value lines)")
      ->required();
  for (const auto& key : experiment_config_keys()) {
    run->add_option_function<std::string>(
        "--" + key, [&overrides, key](const std::string& v) { overrides[key] = v; },
        "Override config key '" + key + "'");
  }

  std::string spectrum_path;
  auto* spectrum = app.add_subcommand("spectrum", "Exact diagonalization of one Hamiltonian file");
  spectrum->add_option("file", spectrum_path, "Hamiltonian file")->required();

  std::string validate_target;
  auto* validate = app.add_subcommand("validate", "Lint Hamiltonian fixture files");
  validate->add_option("path", validate_target, "File or fixture directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return run_command(config_path, overrides);
    if (*spectrum) return spectrum_command(spectrum_path);
    if (*validate) return validate_command(validate_target);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return kExitFixture;
  } catch (const NumericalError& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NonFiniteObjective& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
