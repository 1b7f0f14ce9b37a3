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
#include <map>
#include <string>
#include <vector>

#include "vqse/eigensolvers.hpp"
#include "vqse/hamiltonian_io.hpp"
#include "vqse/optimizer.hpp"

namespace vqse {

/// Environment variable that re-roots relative output directories.
inline constexpr const char* kOutputRootEnv = "VQSE_OUTPUT_ROOT";

inline constexpr const char* kResultsHeader =
    "molecule,bond_length,prescreen_iters,state_index,energy,exact_energy,log10_abs_error";

struct ExperimentConfig {
  /// A single .ham file or a directory of them.
  std::filesystem::path hamiltonian;
  std::string molecule;
  /// Empty selects every matching fixture in the directory.
  std::vector<double> bond_lengths;
  int depth = 2;
  int n_electrons = 2;
  std::vector<int> prescreen_iters{0, 5, 500};
  int vqse_iters = 5000;
  std::vector<std::string> ssvqe_basis{"1000", "1100", "0110", "0010"};
  /// Empty means the default (N - j)/(N + 1) profile.
  std::vector<double> weights;
  PenaltyConfig penalties;
  OptimizerConfig optimizer;
  std::filesystem::path output_dir = "results";
  int jobs = 1;

  void validate() const;
};

/// Every key accepted by the config file and the `run` command line.
const std::vector<std::string>& experiment_config_keys();

/// Applies one `key = value` setting. Throws ConfigError for unknown keys or
/// unparsable values.
void apply_config_setting(ExperimentConfig& config, const std::string& key,
                          const std::string& value);

/// Plain-text `key = value` lines; `#` starts a comment.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// output_dir, re-rooted under $VQSE_OUTPUT_ROOT when that is set and the
/// configured path is relative.
std::filesystem::path resolve_output_dir(const ExperimentConfig& config);

/// Fixtures selected by the config, ordered by bond length.
std::vector<HamiltonianFile> load_fixtures(const ExperimentConfig& config);

struct SweepRecord {
  std::string molecule;
  double bond_length = 0.0;
  int prescreen_iters = 0;
  std::string fixture;
  std::string checksum;
  RunRecord run;
  std::vector<double> exact_levels;
  std::vector<StateComparison> states;
};

struct SummaryRow {
  std::string molecule;
  double bond_length = 0.0;
  int prescreen_iters = 0;
  std::size_t under_1e2 = 0;
  std::size_t under_1e3 = 0;
  double max_log10_error = 0.0;
  double median_log10_error = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records);

/// One record per (fixture, prescreen budget). Writes results.csv,
/// diagnostics.csv, summary.csv, traces/ and provenance.json under the
/// resolved output directory (skipped when `write_outputs` is false).
/// Runs whatever completed before a failure is written, then rethrows.
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, bool write_outputs = true);

std::string results_csv(const std::vector<SweepRecord>& records);
std::string diagnostics_csv(const std::vector<SweepRecord>& records);
std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string provenance_json(const ExperimentConfig& config,
                            const std::vector<SweepRecord>& records);

}  // namespace vqse
