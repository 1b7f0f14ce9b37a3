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

#include "vqse/eigensolvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "vqse/errors.hpp"
#include "vqse/statevector.hpp"

namespace vqse {

WeightProfile::WeightProfile(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight profile is empty");
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (!(weights_[j] > 0.0)) {
      throw std::invalid_argument("weights must be positive");
    }
    if (j > 0 && !(weights_[j] < weights_[j - 1])) {
      throw std::invalid_argument("weights must be strictly decreasing");
    }
  }
}

double WeightProfile::sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

WeightProfile WeightProfile::truncated(std::size_t count) const {
  if (count == 0 || count > weights_.size()) {
    throw std::invalid_argument("cannot take " + std::to_string(count) + " of " +
                                std::to_string(weights_.size()) + " weights");
  }
  return WeightProfile({weights_.begin(), weights_.begin() + static_cast<long>(count)});
}

WeightProfile default_weights(std::size_t n_states) {
  if (n_states == 0) throw std::invalid_argument("need at least one state");
  const double n = static_cast<double>(n_states);
  std::vector<double> w(n_states);
  for (std::size_t j = 0; j < n_states; ++j) {
    w[j] = (n - static_cast<double>(j)) / (n + 1.0);
  }
  return WeightProfile(std::move(w));
}

std::vector<std::uint64_t> default_ssvqe_basis() {
  return {basis_index(4, "1000"), basis_index(4, "1100"), basis_index(4, "0110"),
          basis_index(4, "0010")};
}

std::vector<std::uint64_t> full_basis(int n_qubits) {
  std::vector<std::uint64_t> out(std::size_t{1} << n_qubits);
  std::iota(out.begin(), out.end(), std::uint64_t{0});
  return out;
}

namespace {

void check_basis(int n_qubits, std::span<const std::uint64_t> basis, const char* what) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::set<std::uint64_t> seen;
  for (auto b : basis) {
    if (b >= dim) {
      throw std::invalid_argument(std::string(what) + " state " + std::to_string(b) +
                                  " outside the register");
    }
    if (!seen.insert(b).second) {
      throw std::invalid_argument(std::string(what) +
                                  " states are not orthogonal (repeated basis state " +
                                  basis_label(n_qubits, b) + ")");
    }
  }
}

void check_registers(const PauliSum& h, const AnsatzCircuit& circuit) {
  if (h.n_qubits() != circuit.n_qubits()) {
    throw std::invalid_argument("Hamiltonian and circuit registers differ");
  }
  if (!h.is_hermitian()) throw std::invalid_argument("Hamiltonian is not Hermitian");
}

std::vector<StateVector> evolve(const AnsatzCircuit& circuit, std::span<const double> theta,
                                std::span<const std::uint64_t> basis) {
  std::vector<StateVector> states;
  states.reserve(basis.size());
  for (auto b : basis) {
    states.push_back(StateVector::basis_state(circuit.n_qubits(), b));
    circuit.apply_in_place(theta, states.back());
  }
  return states;
}

}  // namespace

WeightedCost::WeightedCost(PauliSum hamiltonian, const AnsatzCircuit& circuit,
                           WeightProfile weights, std::vector<std::uint64_t> basis)
    : hamiltonian_(std::move(hamiltonian)),
      circuit_(&circuit),
      weights_(std::move(weights)),
      basis_(std::move(basis)) {
  check_registers(hamiltonian_, circuit);
  check_basis(circuit.n_qubits(), basis_, "VQSE");
  if (weights_.size() != basis_.size()) {
    throw std::invalid_argument("VQSE needs one weight per basis state: " +
                                std::to_string(weights_.size()) + " weights, " +
                                std::to_string(basis_.size()) + " states");
  }
}

ObjectiveReport WeightedCost::operator()(std::span<const double> theta) const {
  ObjectiveReport report;
  const std::size_t n = basis_.size();
  report.energies.resize(n);
  report.constraint.assign(n, 0.0);
  report.deflation.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    StateVector psi = StateVector::basis_state(circuit_->n_qubits(), basis_[j]);
    circuit_->apply_in_place(theta, psi);
    report.energies[j] = expectation(psi, hamiltonian_);
    report.total += weights_[j] * report.energies[j];
  }
  return report;
}

SsvqeObjective::SsvqeObjective(PauliSum hamiltonian, const AnsatzCircuit& circuit,
                               WeightProfile weights,
                               std::vector<std::uint64_t> init_states,
                               PenaltyConfig penalties)
    : hamiltonian_(std::move(hamiltonian)),
      circuit_(&circuit),
      weights_(std::move(weights)),
      init_states_(std::move(init_states)),
      deflation_weight_(penalties.deflation_weight) {
  check_registers(hamiltonian_, circuit);
  check_basis(circuit.n_qubits(), init_states_, "SSVQE");
  if (weights_.size() != init_states_.size()) {
    throw std::invalid_argument("SSVQE needs one weight per initial state");
  }
  if (deflation_weight_ < 0.0) {
    throw std::invalid_argument("deflation weight must be non-negative");
  }
  std::vector<SymmetryObservable> observables;
  for (const auto& p : penalties.constraints) {
    if (p.weight < 0.0) throw std::invalid_argument("constraint weights must be non-negative");
    if (p.weight == 0.0) continue;
    if (observables.empty()) observables = symmetry_observables(circuit.n_qubits());
    std::vector<double> targets = p.targets;
    if (targets.size() == 1) targets.assign(init_states_.size(), targets.front());
    if (targets.size() != init_states_.size()) {
      throw std::invalid_argument("constraint " + to_string(p.kind) +
                                  " needs one target per SSVQE state");
    }
    const auto it = std::find_if(observables.begin(), observables.end(),
                                 [&](const auto& o) { return o.kind == p.kind; });
    penalties_.push_back({it->realization, p.weight, std::move(targets)});
  }
}

ObjectiveReport SsvqeObjective::operator()(std::span<const double> theta) const {
  const auto states = evolve(*circuit_, theta, init_states_);
  const std::size_t n = states.size();
  ObjectiveReport report;
  report.energies.resize(n);
  report.constraint.assign(n, 0.0);
  report.deflation.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    report.energies[j] = expectation(states[j], hamiltonian_);
    for (const auto& p : penalties_) {
      const double delta = expectation(states[j], p.observable) - p.targets[j];
      report.constraint[j] += p.weight * delta * delta;
    }
    for (std::size_t i = 0; i < j; ++i) {
      report.deflation[j] += deflation_weight_ * overlap_sq(states[i], states[j]);
    }
    report.total +=
        weights_[j] * (report.energies[j] + report.constraint[j] + report.deflation[j]);
  }
  return report;
}

ObjectiveReport vqse_cost(const PauliSum& h, const AnsatzCircuit& circuit,
                          std::span<const double> theta, const WeightProfile& weights) {
  return WeightedCost(h, circuit, weights, full_basis(circuit.n_qubits()))(theta);
}

ObjectiveReport ssvqe_objective(const PauliSum& h, const AnsatzCircuit& circuit,
                                std::span<const double> theta,
                                const WeightProfile& weights,
                                std::span<const std::uint64_t> init_states,
                                const PenaltyConfig& penalties) {
  return SsvqeObjective(h, circuit, weights, {init_states.begin(), init_states.end()},
                        penalties)(theta);
}

RunRecord prescreen_then_solve(const PauliSum& h, const AnsatzCircuit& circuit,
                               int prescreen_iters, int vqse_iters,
                               const PipelineConfig& config) {
  if (prescreen_iters < 0 || vqse_iters < 0) {
    throw std::invalid_argument("iteration budgets must be non-negative");
  }
  RunRecord record;
  record.vqse_basis =
      config.vqse_basis.empty() ? full_basis(circuit.n_qubits()) : config.vqse_basis;
  record.ssvqe_basis =
      config.ssvqe_basis.empty() ? default_ssvqe_basis() : config.ssvqe_basis;
  const std::set<std::uint64_t> vqse_set(record.vqse_basis.begin(), record.vqse_basis.end());
  for (auto b : record.ssvqe_basis) {
    if (!vqse_set.contains(b)) {
      throw std::invalid_argument(
          "SSVQE basis must be a subset of the VQSE basis; state " +
          basis_label(circuit.n_qubits(), b) + " is not in the VQSE basis");
    }
  }
  const WeightProfile weights = config.weights.empty()
                                    ? default_weights(record.vqse_basis.size())
                                    : WeightProfile(config.weights);
  record.weights.assign(weights.values().begin(), weights.values().end());

  record.theta_initial = config.initial_theta.empty()
                             ? std::vector<double>(circuit.parameter_count(), 0.0)
                             : config.initial_theta;
  if (record.theta_initial.size() != circuit.parameter_count()) {
    throw std::invalid_argument("initial theta does not match the circuit");
  }

  // Both phases optimize the same circuit object, so the variable count and
  // cluster structure agree by construction.
  const WeightedCost vqse(h, circuit, weights, record.vqse_basis);
  const SsvqeObjective ssvqe(h, circuit, weights.truncated(record.ssvqe_basis.size()),
                             record.ssvqe_basis, config.penalties);

  OptimizerConfig pre = config.prescreen_optimizer;
  pre.max_iterations = prescreen_iters;
  auto phase1 = minimize([&](std::span<const double> t) { return ssvqe(t).total; },
                         record.theta_initial, pre);
  record.theta_prescreened = prescreen_iters == 0 ? record.theta_initial : phase1.theta;
  record.prescreen_trace = std::move(phase1.trace);

  OptimizerConfig post = config.vqse_optimizer;
  post.max_iterations = vqse_iters;
  auto phase2 = minimize([&](std::span<const double> t) { return vqse(t).total; },
                         record.theta_prescreened, post);
  record.theta_final = std::move(phase2.theta);
  record.vqse_trace = std::move(phase2.trace);
  record.final_report = vqse(record.theta_final);
  return record;
}

ExactSpectrum exact_spectrum(const PauliSum& h) {
  if (!h.is_hermitian()) throw std::invalid_argument("exact_spectrum needs a Hermitian sum");
  const DenseMatrix m = to_dense(h);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("dense eigensolver failed to converge");
  }
  ExactSpectrum out;
  const auto& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  out.eigenvectors = solver.eigenvectors();
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const double r = (m * out.eigenvectors.col(i) - values[i] * out.eigenvectors.col(i)).norm();
    out.max_residual = std::max(out.max_residual, r);
  }
  if (!(out.max_residual < 1e-9)) {
    throw NumericalError("eigen-residual " + std::to_string(out.max_residual) +
                         " exceeds 1e-9");
  }
  return out;
}

double rearrangement_bound(const WeightProfile& weights, const ExactSpectrum& spectrum) {
  if (weights.size() > spectrum.eigenvalues.size()) {
    throw std::invalid_argument("more weights than exact levels");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    total += weights[j] * spectrum.eigenvalues[j];
  }
  return total;
}

double log10_abs_error(double energy, double exact) {
  const double diff = std::abs(energy - exact);
  if (diff == 0.0) return kLogErrorFloor;
  return std::max(std::log10(diff), kLogErrorFloor);
}

std::vector<StateComparison> state_assignment(std::span<const double> energies,
                                              const ExactSpectrum& spectrum) {
  const auto& exact = spectrum.eigenvalues;
  if (energies.size() > exact.size()) {
    throw std::invalid_argument("more states than exact levels");
  }
  std::vector<std::size_t> order(energies.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });

  std::vector<StateComparison> out(energies.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    out[order[r]].rank = r;
  }
  for (std::size_t j = 0; j < energies.size(); ++j) {
    auto& c = out[j];
    c.state = j;
    c.energy = energies[j];
    c.by_index_exact = exact[j];
    c.by_index_log_error = log10_abs_error(c.energy, c.by_index_exact);
    c.rank_exact = exact[c.rank];
    c.rank_log_error = log10_abs_error(c.energy, c.rank_exact);
    c.nearest_exact = *std::min_element(exact.begin(), exact.end(), [&](double a, double b) {
      return std::abs(a - c.energy) < std::abs(b - c.energy);
    });
    c.nearest_log_error = log10_abs_error(c.energy, c.nearest_exact);
  }
  return out;
}

std::vector<StateComparison> state_assignment(const RunRecord& record,
                                              const ExactSpectrum& spectrum) {
  return state_assignment(record.final_report.energies, spectrum);
}

std::size_t count_converged(std::span<const StateComparison> states, double threshold) {
  return static_cast<std::size_t>(
      std::count_if(states.begin(), states.end(), [threshold](const StateComparison& c) {
        return std::abs(c.energy - c.rank_exact) < threshold;
      }));
}

}  // namespace vqse
