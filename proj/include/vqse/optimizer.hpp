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
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vqse {

using Objective = std::function<double(std::span<const double>)>;

enum class OptimizerMethod { NelderMead, FiniteDiffGradientDescent };

std::string to_string(OptimizerMethod method);
OptimizerMethod optimizer_method_from_string(const std::string& name);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::NelderMead;
  int max_iterations = 500;
  /// Initial simplex edge (Nelder-Mead), in radians for circuit parameters.
  double initial_step = 0.1;
  /// Gradient-descent learning rate.
  double learning_rate = 0.05;
  /// Central-difference step for gradient descent.
  double gradient_step = 1e-5;
  /// Stop when the objective spread / change falls below this.
  double tolerance = 1e-10;
  /// Seeds the simplex edge orientation; 0 keeps the axis-aligned simplex.
  std::uint64_t seed = 0;

  void validate() const;
};

struct IterationSample {
  int iteration = 0;
  /// Best objective value known after this iteration.
  double objective = 0.0;
  /// FNV-1a hash of the best theta's bytes.
  std::uint64_t theta_hash = 0;
};

struct IterationTrace {
  std::vector<IterationSample> samples;
  std::size_t evaluations = 0;
  bool converged = false;

  /// `iteration,objective` rows with a header line.
  std::string to_csv() const;
};

struct OptimizationResult {
  std::vector<double> theta;
  double value = 0.0;
  IterationTrace trace;
};

/// Thrown when the objective returns NaN or infinity.
class NonFiniteObjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One iteration is one simplex transformation (Nelder-Mead) or one gradient
/// step. The trace holds max_iterations + 1 samples unless the tolerance
/// fired, which sets trace.converged.
OptimizationResult minimize(const Objective& objective,
                            std::span<const double> theta0,
                            const OptimizerConfig& config);

/// Central differences, one coordinate at a time.
std::vector<double> finite_diff_gradient(const Objective& objective,
                                         std::span<const double> theta,
                                         double step);

std::uint64_t hash_theta(std::span<const double> theta);

}  // namespace vqse
