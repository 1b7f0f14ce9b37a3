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

#include <cstdint>
#include <span>
#include <vector>

#include "vqse/ansatz.hpp"
#include "vqse/fermion.hpp"
#include "vqse/optimizer.hpp"
#include "vqse/pauli.hpp"

namespace vqse {

/// Strictly decreasing positive weights λ_j. They define ρ = Σ_j λ_j |j><j|
/// for VQSE and the per-state weighting for SSVQE.
class WeightProfile {
 public:
  explicit WeightProfile(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::span<const double> values() const { return weights_; }
  double sum() const;
  /// The first `count` weights.
  WeightProfile truncated(std::size_t count) const;

 private:
  std::vector<double> weights_;
};

/// λ_j = (N - j) / (N + 1), j = 0..N-1. Not trace-normalized.
WeightProfile default_weights(std::size_t n_states);

struct ObjectiveReport {
  double total = 0.0;
  std::vector<double> energies;
  std::vector<double> constraint;
  std::vector<double> deflation;
};

/// Quadratic penalty μ (<O>_j - target_j)^2 on one conserved quantity.
struct ObservablePenalty {
  SymmetryKind kind = SymmetryKind::ParticleNumber;
  double weight = 0.0;
  /// One target per SSVQE state, or a single value shared by all states.
  std::vector<double> targets;
};

struct PenaltyConfig {
  std::vector<ObservablePenalty> constraints;
  /// β in β Σ_{i<j} |<ψ_i|ψ_j>|^2.
  double deflation_weight = 1.0;
};

/// The four SSVQE states |1000>, |1100>, |0110>, |0010> (qubit 0 first).
std::vector<std::uint64_t> default_ssvqe_basis();

/// All 2^n basis indices in ascending order.
std::vector<std::uint64_t> full_basis(int n_qubits);

/// Σ_j λ_j E_j with E_j = <j|U†HU|j> over the given basis states.
class WeightedCost {
 public:
  WeightedCost(PauliSum hamiltonian, const AnsatzCircuit& circuit,
               WeightProfile weights, std::vector<std::uint64_t> basis);

  ObjectiveReport operator()(std::span<const double> theta) const;
  std::span<const std::uint64_t> basis() const { return basis_; }

 private:
  PauliSum hamiltonian_;
  const AnsatzCircuit* circuit_;
  WeightProfile weights_;
  std::vector<std::uint64_t> basis_;
};

/// Σ_j λ_j (E_j + E_j^const + E_j^def) over orthogonal basis states.
class SsvqeObjective {
 public:
  SsvqeObjective(PauliSum hamiltonian, const AnsatzCircuit& circuit,
                 WeightProfile weights, std::vector<std::uint64_t> init_states,
                 PenaltyConfig penalties);

  ObjectiveReport operator()(std::span<const double> theta) const;

 private:
  struct PreparedPenalty {
    PauliSum observable;
    double weight;
    std::vector<double> targets;
  };

  PauliSum hamiltonian_;
  const AnsatzCircuit* circuit_;
  WeightProfile weights_;
  std::vector<std::uint64_t> init_states_;
  std::vector<PreparedPenalty> penalties_;
  double deflation_weight_;
};

/// VQSE cost over all 2^n basis states; weights must have 2^n entries.
ObjectiveReport vqse_cost(const PauliSum& h, const AnsatzCircuit& circuit,
                          std::span<const double> theta, const WeightProfile& weights);

ObjectiveReport ssvqe_objective(const PauliSum& h, const AnsatzCircuit& circuit,
                                std::span<const double> theta,
                                const WeightProfile& weights,
                                std::span<const std::uint64_t> init_states,
                                const PenaltyConfig& penalties);

struct PipelineConfig {
  /// VQSE weights; empty means default_weights(|vqse_basis|).
  std::vector<double> weights;
  /// Empty means every basis state.
  std::vector<std::uint64_t> vqse_basis;
  /// Empty means default_ssvqe_basis().
  std::vector<std::uint64_t> ssvqe_basis;
  PenaltyConfig penalties;
  OptimizerConfig prescreen_optimizer;
  OptimizerConfig vqse_optimizer;
  /// Empty means all zeros.
  std::vector<double> initial_theta;
};

struct RunRecord {
  std::vector<std::uint64_t> vqse_basis;
  std::vector<std::uint64_t> ssvqe_basis;
  std::vector<double> weights;
  std::vector<double> theta_initial;
  std::vector<double> theta_prescreened;
  std::vector<double> theta_final;
  IterationTrace prescreen_trace;
  IterationTrace vqse_trace;
  /// Final VQSE report; energies are ordered by weight index.
  ObjectiveReport final_report;
};

/// SSVQE on the subset basis for `prescreen_iters` iterations, then VQSE on
/// the full basis for `vqse_iters` iterations from the SSVQE parameters.
/// Both phases share `circuit`.
RunRecord prescreen_then_solve(const PauliSum& h, const AnsatzCircuit& circuit,
                               int prescreen_iters, int vqse_iters,
                               const PipelineConfig& config);

struct ExactSpectrum {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix eigenvectors;         // column i pairs with eigenvalues[i]
  double max_residual = 0.0;
};

/// Ascending eigenpairs of to_dense(h). Throws NumericalError if any
/// residual ‖Hv - Ev‖ reaches 1e-9.
ExactSpectrum exact_spectrum(const PauliSum& h);

/// Σ_j λ_j E_j^exact with ascending eigenvalues paired to descending weights:
/// the global minimum of the VQSE cost.
double rearrangement_bound(const WeightProfile& weights, const ExactSpectrum& spectrum);

/// Floor used for log10 |E - E_exact| when the difference vanishes.
inline constexpr double kLogErrorFloor = -16.0;

double log10_abs_error(double energy, double exact);

struct StateComparison {
  std::size_t state = 0;   // weight index
  double energy = 0.0;
  /// Level with the same index as the state.
  double by_index_exact = 0.0;
  double by_index_log_error = 0.0;
  /// Position of this energy among the sorted computed energies and the
  /// exact level at that position.
  std::size_t rank = 0;
  double rank_exact = 0.0;
  double rank_log_error = 0.0;
  /// Closest exact level, diagnostic only.
  double nearest_exact = 0.0;
  double nearest_log_error = 0.0;
};

std::vector<StateComparison> state_assignment(std::span<const double> energies,
                                              const ExactSpectrum& spectrum);
std::vector<StateComparison> state_assignment(const RunRecord& record,
                                              const ExactSpectrum& spectrum);

/// Number of levels whose rank-paired error is below `threshold` Hartree.
std::size_t count_converged(std::span<const StateComparison> states, double threshold);

}  // namespace vqse
