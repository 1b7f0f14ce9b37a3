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

#include "vqse/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "vqse/pauli.hpp"

namespace vqse {
namespace {

double checked_eval(const Objective& f, std::span<const double> theta,
                    std::size_t& evaluations) {
  ++evaluations;
  const double value = f(theta);
  if (!std::isfinite(value)) {
    throw NonFiniteObjective("objective returned a non-finite value at evaluation " +
                             std::to_string(evaluations));
  }
  return value;
}

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

OptimizationResult nelder_mead(const Objective& f, std::span<const double> theta0,
                               const OptimizerConfig& config) {
  const std::size_t n = theta0.size();
  OptimizationResult result;
  result.theta.assign(theta0.begin(), theta0.end());
  result.value = checked_eval(f, theta0, result.trace.evaluations);
  result.trace.samples.push_back({0, result.value, hash_theta(result.theta)});
  if (config.max_iterations == 0 || n == 0) return result;

  // Dimension-adapted coefficients (Gao & Han); they reduce to the classic
  // 1, 2, 1/2, 1/2 at n = 2.
  const double dim = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dim;
  const double rho = 0.75 - 1.0 / (2.0 * dim);
  const double sigma = 1.0 - 1.0 / dim;

  std::vector<double> signs(n, 1.0);
  if (config.seed != 0) {
    std::mt19937_64 rng(config.seed);
    std::bernoulli_distribution coin(0.5);
    for (auto& s : signs) s = coin(rng) ? 1.0 : -1.0;
  }

  std::vector<Vertex> simplex(n + 1);
  simplex[0] = {result.theta, result.value};
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v{result.theta, 0.0};
    v.x[i] += signs[i] * config.initial_step;
    v.f = checked_eval(f, v.x, result.trace.evaluations);
    simplex[i + 1] = std::move(v);
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::stable_sort(simplex.begin(), simplex.end(), by_value);

  std::vector<double> centroid(n);
  auto point_along = [&](double t) {
    // centroid + t (centroid - worst)
    std::vector<double> p(n);
    const auto& worst = simplex[n].x;
    for (std::size_t i = 0; i < n; ++i) p[i] = centroid[i] + t * (centroid[i] - worst[i]);
    return p;
  };

  for (int it = 1; it <= config.max_iterations; ++it) {
    if (simplex[n].f - simplex[0].f < config.tolerance) {
      result.trace.converged = true;
      break;
    }
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i];
    }
    for (auto& c : centroid) c /= dim;

    Vertex reflected{point_along(alpha), 0.0};
    reflected.f = checked_eval(f, reflected.x, result.trace.evaluations);

    bool shrink = false;
    if (reflected.f < simplex[0].f) {
      Vertex expanded{point_along(alpha * gamma), 0.0};
      expanded.f = checked_eval(f, expanded.x, result.trace.evaluations);
      simplex[n] = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
    } else if (reflected.f < simplex[n - 1].f) {
      simplex[n] = std::move(reflected);
    } else if (reflected.f < simplex[n].f) {
      Vertex outside{point_along(alpha * rho), 0.0};
      outside.f = checked_eval(f, outside.x, result.trace.evaluations);
      if (outside.f <= reflected.f) {
        simplex[n] = std::move(outside);
      } else {
        shrink = true;
      }
    } else {
      Vertex inside{point_along(-rho), 0.0};
      inside.f = checked_eval(f, inside.x, result.trace.evaluations);
      if (inside.f < simplex[n].f) {
        simplex[n] = std::move(inside);
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t v = 1; v <= n; ++v) {
        for (std::size_t i = 0; i < n; ++i) {
          simplex[v].x[i] = simplex[0].x[i] + sigma * (simplex[v].x[i] - simplex[0].x[i]);
        }
        simplex[v].f = checked_eval(f, simplex[v].x, result.trace.evaluations);
      }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    result.trace.samples.push_back({it, simplex[0].f, hash_theta(simplex[0].x)});
  }
  if (simplex[0].f < result.value) {
    result.theta = simplex[0].x;
    result.value = simplex[0].f;
  }
  return result;
}

OptimizationResult gradient_descent(const Objective& f, std::span<const double> theta0,
                                    const OptimizerConfig& config) {
  OptimizationResult result;
  std::vector<double> theta(theta0.begin(), theta0.end());
  double value = checked_eval(f, theta, result.trace.evaluations);
  result.theta = theta;
  result.value = value;
  result.trace.samples.push_back({0, value, hash_theta(theta)});

  for (int it = 1; it <= config.max_iterations; ++it) {
    const auto grad = finite_diff_gradient(f, theta, config.gradient_step);
    result.trace.evaluations += 2 * theta.size();
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= config.learning_rate * grad[i];
    const double next = checked_eval(f, theta, result.trace.evaluations);
    result.trace.samples.push_back({it, next, hash_theta(theta)});
    if (next < result.value) {
      result.value = next;
      result.theta = theta;
    }
    const bool small_change = std::abs(next - value) < config.tolerance;
    value = next;
    if (small_change) {
      result.trace.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace

std::string to_string(OptimizerMethod method) {
  switch (method) {
    case OptimizerMethod::NelderMead: return "nelder_mead";
    case OptimizerMethod::FiniteDiffGradientDescent: return "finite_diff_gradient_descent";
  }
  return "unknown";
}

OptimizerMethod optimizer_method_from_string(const std::string& name) {
  if (name == "nelder_mead") return OptimizerMethod::NelderMead;
  if (name == "finite_diff_gradient_descent" || name == "gradient_descent") {
    return OptimizerMethod::FiniteDiffGradientDescent;
  }
  throw std::invalid_argument("unknown optimizer method '" + name + "'");
}

void OptimizerConfig::validate() const {
  if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
  if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
  if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be positive");
  if (!(gradient_step > 0.0)) throw std::invalid_argument("gradient_step must be positive");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

std::string IterationTrace::to_csv() const {
  std::string out = "iteration,objective\n";
  for (const auto& s : samples) {
    out += std::to_string(s.iteration);
    out += ',';
    out += format_real(s.objective);
    out += '\n';
  }
  return out;
}

OptimizationResult minimize(const Objective& objective, std::span<const double> theta0,
                            const OptimizerConfig& config) {
  config.validate();
  for (double t : theta0) {
    if (!std::isfinite(t)) throw std::invalid_argument("theta0 must be finite");
  }
  switch (config.method) {
    case OptimizerMethod::NelderMead: return nelder_mead(objective, theta0, config);
    case OptimizerMethod::FiniteDiffGradientDescent:
      return gradient_descent(objective, theta0, config);
  }
  throw std::logic_error("unhandled optimizer method");
}

std::vector<double> finite_diff_gradient(const Objective& objective,
                                         std::span<const double> theta, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<double> point(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  std::size_t evaluations = 0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    const double saved = point[i];
    point[i] = saved + step;
    const double up = checked_eval(objective, point, evaluations);
    point[i] = saved - step;
    const double down = checked_eval(objective, point, evaluations);
    point[i] = saved;
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

std::uint64_t hash_theta(std::span<const double> theta) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : theta) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

}  // namespace vqse
