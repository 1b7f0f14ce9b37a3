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

#include "vqse/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <future>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vqse/ansatz.hpp"
#include "vqse/errors.hpp"
#include "vqse/fermion.hpp"
#include "vqse/statevector.hpp"

namespace vqse {
namespace {

constexpr double kBondLengthMatch = 1e-9;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("config key '" + key + "': '" + text + "' is not a number");
  }
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  return static_cast<int>(to_integer(key, text));
}

template <typename F>
auto map_list(const std::string& value, F&& convert) {
  std::vector<decltype(convert(std::string{}))> out;
  for (const auto& item : split_list(value)) out.push_back(convert(item));
  return out;
}

ObservablePenalty& penalty_for(PenaltyConfig& penalties, SymmetryKind kind) {
  for (auto& p : penalties.constraints) {
    if (p.kind == kind) return p;
  }
  penalties.constraints.push_back({kind, 0.0, {}});
  return penalties.constraints.back();
}

std::string bond_tag(double r) { return format_real(r); }

}  // namespace

const std::vector<std::string>& experiment_config_keys() {
  static const std::vector<std::string> keys{
      "hamiltonian",
      "molecule",
      "bond_lengths",
      "depth",
      "n_electrons",
      "prescreen_iters",
      "vqse_iters",
      "ssvqe_basis",
      "weights",
      "optimizer",
      "initial_step",
      "learning_rate",
      "gradient_step",
      "tolerance",
      "seed",
      "deflation_weight",
      "penalty_particle_number",
      "penalty_particle_number_targets",
      "penalty_s_z",
      "penalty_s_z_targets",
      "penalty_s_squared",
      "penalty_s_squared_targets",
      "output_dir",
      "jobs",
  };
  return keys;
}

void apply_config_setting(ExperimentConfig& c, const std::string& key,
                          const std::string& raw) {
  const std::string value = trim(raw);
  try {
    if (key == "hamiltonian") {
      c.hamiltonian = value;
    } else if (key == "molecule") {
      c.molecule = value;
    } else if (key == "bond_lengths") {
      c.bond_lengths = map_list(value, [&](const std::string& s) { return to_double(key, s); });
    } else if (key == "depth") {
      c.depth = to_int(key, value);
    } else if (key == "n_electrons") {
      c.n_electrons = to_int(key, value);
    } else if (key == "prescreen_iters") {
      c.prescreen_iters = map_list(value, [&](const std::string& s) { return to_int(key, s); });
    } else if (key == "vqse_iters") {
      c.vqse_iters = to_int(key, value);
    } else if (key == "ssvqe_basis") {
      c.ssvqe_basis = split_list(value);
    } else if (key == "weights") {
      c.weights = value == "default"
                      ? std::vector<double>{}
                      : map_list(value, [&](const std::string& s) { return to_double(key, s); });
    } else if (key == "optimizer") {
      c.optimizer.method = optimizer_method_from_string(value);
    } else if (key == "initial_step") {
      c.optimizer.initial_step = to_double(key, value);
    } else if (key == "learning_rate") {
      c.optimizer.learning_rate = to_double(key, value);
    } else if (key == "gradient_step") {
      c.optimizer.gradient_step = to_double(key, value);
    } else if (key == "tolerance") {
      c.optimizer.tolerance = to_double(key, value);
    } else if (key == "seed") {
      const long long seed = to_integer(key, value);
      if (seed < 0) throw ConfigError("config key 'seed' must be non-negative");
      c.optimizer.seed = static_cast<std::uint64_t>(seed);
    } else if (key == "deflation_weight") {
      c.penalties.deflation_weight = to_double(key, value);
    } else if (key.starts_with("penalty_")) {
      std::string name = key.substr(8);
      const bool targets = name.ends_with("_targets");
      if (targets) name.resize(name.size() - 8);
      auto& p = penalty_for(c.penalties, symmetry_kind_from_string(name));
      if (targets) {
        p.targets = map_list(value, [&](const std::string& s) { return to_double(key, s); });
      } else {
        p.weight = to_double(key, value);
      }
    } else if (key == "output_dir") {
      c.output_dir = value;
    } else if (key == "jobs") {
      c.jobs = to_int(key, value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("config key '" + key + "': " + e.what());
  }
}

void ExperimentConfig::validate() const {
  if (hamiltonian.empty()) throw ConfigError("config: 'hamiltonian' is required");
  if (depth < 1) throw ConfigError("config: depth must be >= 1");
  if (n_electrons < 0) throw ConfigError("config: n_electrons must be >= 0");
  if (vqse_iters < 0) throw ConfigError("config: vqse_iters must be >= 0");
  if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
  if (prescreen_iters.empty()) throw ConfigError("config: prescreen_iters is empty");
  for (int p : prescreen_iters) {
    if (p < 0) throw ConfigError("config: prescreen budgets must be >= 0");
  }
  for (double r : bond_lengths) {
    if (!(r > 0.0)) throw ConfigError("config: bond lengths must be positive");
  }
  if (ssvqe_basis.empty()) throw ConfigError("config: ssvqe_basis is empty");
  if (penalties.deflation_weight < 0.0) {
    throw ConfigError("config: deflation_weight must be non-negative");
  }
  for (const auto& p : penalties.constraints) {
    if (p.weight < 0.0) throw ConfigError("config: penalty weights must be non-negative");
    if (p.weight > 0.0 && p.targets.empty()) {
      throw ConfigError("config: penalty_" + to_string(p.kind) + " needs targets");
    }
  }
  if (!weights.empty()) {
    try {
      WeightProfile check(weights);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config: weights: ") + e.what());
    }
  }
  try {
    optimizer.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    apply_config_setting(config, trim(body.substr(0, eq)), body.substr(eq + 1));
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const FixtureError&) {
    throw ConfigError("cannot open config file " + path.string());
  }
  ExperimentConfig config = parse_experiment_config(text);
  if (!config.hamiltonian.empty() && config.hamiltonian.is_relative()) {
    config.hamiltonian = path.parent_path() / config.hamiltonian;
  }
  return config;
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& config) {
  const char* root = std::getenv(kOutputRootEnv);
  if (root != nullptr && *root != '\0' && config.output_dir.is_relative()) {
    return std::filesystem::path(root) / config.output_dir;
  }
  return config.output_dir;
}

std::vector<HamiltonianFile> load_fixtures(const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  std::vector<HamiltonianFile> files;
  if (!fs::exists(config.hamiltonian)) {
    throw FixtureError("Hamiltonian path " + config.hamiltonian.string() + " does not exist");
  }
  if (fs::is_directory(config.hamiltonian)) {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(config.hamiltonian)) {
      if (entry.is_regular_file() && entry.path().extension() == ".ham") {
        paths.push_back(entry.path());
      }
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      auto f = parse_hamiltonian_file(p);
      if (!config.molecule.empty() && f.molecule() != config.molecule) continue;
      files.push_back(std::move(f));
    }
  } else {
    files.push_back(parse_hamiltonian_file(config.hamiltonian));
  }
  for (const auto& f : files) {
    if (!f.bond_length()) {
      throw FixtureError(f.source + ": missing '# bond_length_angstrom' metadata");
    }
  }
  std::stable_sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return *a.bond_length() < *b.bond_length();
  });
  if (config.bond_lengths.empty()) {
    if (files.empty()) {
      throw FixtureError("no Hamiltonian fixtures for molecule '" + config.molecule + "' in " +
                         config.hamiltonian.string());
    }
    return files;
  }
  std::vector<HamiltonianFile> selected;
  for (double r : config.bond_lengths) {
    const auto it = std::find_if(files.begin(), files.end(), [r](const auto& f) {
      return std::abs(*f.bond_length() - r) < kBondLengthMatch;
    });
    if (it == files.end()) {
      throw FixtureError("missing fixture for " +
                         (config.molecule.empty() ? std::string("molecule") : config.molecule) +
                         " at " + format_real(r) + " Angstrom in " +
                         config.hamiltonian.string());
    }
    selected.push_back(*it);
  }
  std::stable_sort(selected.begin(), selected.end(), [](const auto& a, const auto& b) {
    return *a.bond_length() < *b.bond_length();
  });
  return selected;
}

namespace {

SweepRecord run_one(const ExperimentConfig& config, const HamiltonianFile& file,
                    int prescreen_iters) {
  const PauliSum& h = file.hamiltonian;
  const int n = h.n_qubits();
  const auto generators = ucc_generators(n, config.n_electrons);
  const AnsatzCircuit circuit = build_ansatz(h, generators, config.depth);

  PipelineConfig pipeline;
  pipeline.weights = config.weights;
  pipeline.penalties = config.penalties;
  pipeline.prescreen_optimizer = config.optimizer;
  pipeline.vqse_optimizer = config.optimizer;
  for (const auto& bits : config.ssvqe_basis) {
    try {
      pipeline.ssvqe_basis.push_back(basis_index(n, bits));
    } catch (const std::exception& e) {
      throw ConfigError(std::string("ssvqe_basis: ") + e.what());
    }
  }

  SweepRecord record;
  record.molecule = file.molecule();
  record.bond_length = *file.bond_length();
  record.prescreen_iters = prescreen_iters;
  record.fixture = std::filesystem::path(file.source).filename().string();
  record.checksum = file.checksum;
  record.run = prescreen_then_solve(h, circuit, prescreen_iters, config.vqse_iters, pipeline);
  const ExactSpectrum spectrum = exact_spectrum(h);
  record.exact_levels = spectrum.eigenvalues;
  record.states = state_assignment(record.run, spectrum);
  return record;
}

std::string trace_stem(const SweepRecord& r) {
  return r.molecule + "_r" + bond_tag(r.bond_length) + "_p" + std::to_string(r.prescreen_iters);
}

void write_outputs(const ExperimentConfig& config, const std::vector<SweepRecord>& records) {
  const auto dir = resolve_output_dir(config);
  std::filesystem::create_directories(dir / "traces");
  for (const auto& r : records) {
    write_file_atomic(dir / "traces" / (trace_stem(r) + "_prescreen.csv"),
                      r.run.prescreen_trace.to_csv());
    write_file_atomic(dir / "traces" / (trace_stem(r) + "_vqse.csv"), r.run.vqse_trace.to_csv());
  }
  write_file_atomic(dir / "results.csv", results_csv(records));
  write_file_atomic(dir / "diagnostics.csv", diagnostics_csv(records));
  write_file_atomic(dir / "summary.csv", summary_csv(summarize(records)));
  write_file_atomic(dir / "provenance.json", provenance_json(config, records));
}

}  // namespace

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, bool write) {
  config.validate();
  const auto fixtures = load_fixtures(config);

  struct Task {
    const HamiltonianFile* file;
    int prescreen_iters;
  };
  std::vector<Task> tasks;
  for (const auto& f : fixtures) {
    for (int p : config.prescreen_iters) tasks.push_back({&f, p});
  }

  std::vector<std::optional<SweepRecord>> slots(tasks.size());
  std::exception_ptr failure;
  std::size_t next = 0;
  while (next < tasks.size() && !failure) {
    // Runs are independent; results land in fixed slots so the merge order
    // never depends on scheduling.
    const std::size_t batch_end =
        std::min(tasks.size(), next + static_cast<std::size_t>(config.jobs));
    std::vector<std::future<SweepRecord>> futures;
    for (std::size_t i = next; i < batch_end; ++i) {
      futures.push_back(std::async(config.jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [&config, task = tasks[i]] {
                                     return run_one(config, *task.file, task.prescreen_iters);
                                   }));
    }
    for (std::size_t i = next; i < batch_end; ++i) {
      try {
        slots[i] = futures[i - next].get();
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
    next = batch_end;
  }

  std::vector<SweepRecord> records;
  for (auto& s : slots) {
    if (s) records.push_back(std::move(*s));
  }
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.molecule != b.molecule) return a.molecule < b.molecule;
    if (a.bond_length != b.bond_length) return a.bond_length < b.bond_length;
    return a.prescreen_iters < b.prescreen_iters;
  });
  if (write) write_outputs(config, records);
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records) {
  std::vector<SummaryRow> rows;
  for (const auto& r : records) {
    SummaryRow row;
    row.molecule = r.molecule;
    row.bond_length = r.bond_length;
    row.prescreen_iters = r.prescreen_iters;
    row.under_1e2 = count_converged(r.states, 1e-2);
    row.under_1e3 = count_converged(r.states, 1e-3);
    std::vector<double> logs;
    for (const auto& s : r.states) logs.push_back(s.rank_log_error);
    if (!logs.empty()) {
      std::sort(logs.begin(), logs.end());
      row.max_log10_error = logs.back();
      const std::size_t m = logs.size() / 2;
      row.median_log10_error = logs.size() % 2 ? logs[m] : 0.5 * (logs[m - 1] + logs[m]);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string results_csv(const std::vector<SweepRecord>& records) {
  std::string out = std::string(kResultsHeader) + "\n";
  for (const auto& r : records) {
    for (const auto& s : r.states) {
      out += r.molecule + "," + format_real(r.bond_length) + "," +
             std::to_string(r.prescreen_iters) + "," + std::to_string(s.state) + "," +
             format_real(s.energy) + "," + format_real(s.rank_exact) + "," +
             format_real(s.rank_log_error) + "\n";
    }
  }
  return out;
}

std::string diagnostics_csv(const std::vector<SweepRecord>& records) {
  std::string out =
      "molecule,bond_length,prescreen_iters,state_index,basis_state,energy,rank,"
      "by_index_exact,by_index_log10_error,nearest_exact,nearest_log10_error\n";
  for (const auto& r : records) {
    const int n = static_cast<int>(std::log2(static_cast<double>(r.exact_levels.size())));
    for (const auto& s : r.states) {
      out += r.molecule + "," + format_real(r.bond_length) + "," +
             std::to_string(r.prescreen_iters) + "," + std::to_string(s.state) + "," +
             basis_label(n, r.run.vqse_basis[s.state]) + "," + format_real(s.energy) + "," +
             std::to_string(s.rank) + "," + format_real(s.by_index_exact) + "," +
             format_real(s.by_index_log_error) + "," + format_real(s.nearest_exact) + "," +
             format_real(s.nearest_log_error) + "\n";
    }
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "molecule,bond_length,prescreen_iters,levels_under_1e-2,levels_under_1e-3,"
      "max_log10_error,median_log10_error\n";
  for (const auto& row : rows) {
    out += row.molecule + "," + format_real(row.bond_length) + "," +
           std::to_string(row.prescreen_iters) + "," + std::to_string(row.under_1e2) + "," +
           std::to_string(row.under_1e3) + "," + format_real(row.max_log10_error) + "," +
           format_real(row.median_log10_error) + "\n";
  }
  return out;
}

std::string provenance_json(const ExperimentConfig& config,
                            const std::vector<SweepRecord>& records) {
  using json = nlohmann::ordered_json;
  json j;
  j["molecule"] = config.molecule;
  j["hamiltonian"] = config.hamiltonian.filename().string();
  j["depth"] = config.depth;
  j["n_electrons"] = config.n_electrons;
  j["prescreen_iters"] = config.prescreen_iters;
  j["vqse_iters"] = config.vqse_iters;
  j["ssvqe_basis"] = config.ssvqe_basis;
  j["weights"] = config.weights.empty() ? json("default") : json(config.weights);
  j["optimizer"] = {{"method", to_string(config.optimizer.method)},
                    {"initial_step", config.optimizer.initial_step},
                    {"learning_rate", config.optimizer.learning_rate},
                    {"gradient_step", config.optimizer.gradient_step},
                    {"tolerance", config.optimizer.tolerance},
                    {"seed", config.optimizer.seed}};
  json penalties = json::array();
  for (const auto& p : config.penalties.constraints) {
    penalties.push_back(
        {{"observable", to_string(p.kind)}, {"weight", p.weight}, {"targets", p.targets}});
  }
  j["penalties"] = {{"constraints", penalties},
                    {"deflation_weight", config.penalties.deflation_weight}};
  json runs = json::array();
  for (const auto& r : records) {
    runs.push_back({{"molecule", r.molecule},
                    {"bond_length", r.bond_length},
                    {"prescreen_iters", r.prescreen_iters},
                    {"fixture", r.fixture},
                    {"fixture_sha256", r.checksum},
                    {"parameters", r.run.theta_final.size()},
                    {"prescreen_evaluations", r.run.prescreen_trace.evaluations},
                    {"prescreen_converged", r.run.prescreen_trace.converged},
                    {"vqse_evaluations", r.run.vqse_trace.evaluations},
                    {"vqse_converged", r.run.vqse_trace.converged},
                    {"final_cost", r.run.final_report.total}});
  }
  j["runs"] = runs;
  return j.dump(2) + "\n";
}

}  // namespace vqse
