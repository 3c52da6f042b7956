// Copyright 2026 The remsim Authors
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
#include <string_view>
#include <vector>

namespace remsim {

using Objective = std::function<double(std::span<const double>)>;

enum class OptimizerMethod { NelderMead, Spsa };

std::string_view to_string(OptimizerMethod m);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::NelderMead;
  int max_evals = 2000;
  /// Nelder-Mead stops once the simplex spread in f is below ftol and its
  /// extent in x is below xtol.
  double ftol = 1e-6;
  double xtol = 1e-4;
  double initial_step = 0.1;
  int restarts = 1;
  // SPSA gains: a_k = a / (k + 1 + A)^0.602, c_k = c / (k + 1)^0.101.
  double spsa_a = 0.2;
  double spsa_c = 0.1;
  double spsa_stability = 10.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TracePoint {
  std::vector<double> x;
  double f = 0.0;
};

struct OptimizeResult {
  std::vector<double> x;  // argmin over the trace
  double fun = 0.0;       // min over the trace
  int n_evals = 0;
  bool converged = false;
  std::vector<TracePoint> trace;
};

OptimizeResult minimize_nelder_mead(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg);
OptimizeResult minimize_spsa(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg);
OptimizeResult minimize(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg);

}  // namespace remsim
