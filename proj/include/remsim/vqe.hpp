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
#include <optional>
#include <span>
#include <vector>

#include "remsim/circuit.hpp"
#include "remsim/confusion.hpp"
#include "remsim/optimize.hpp"
#include "remsim/pauli.hpp"
#include "remsim/sim.hpp"

namespace remsim {

enum class BackendKind { Ideal, Noisy };

struct EvaluatorOptions {
  BackendKind backend = BackendKind::Ideal;
  /// Gate noise and (optionally) the readout confusion applied to outcomes.
  NoiseModel noise;
  /// Total shots per energy, split equally across measurement groups; 0 means
  /// exact outcome distributions.
  std::uint64_t shots = 0;
  /// Unfold each group's distribution with this matrix before estimating.
  std::optional<ConfusionMatrix> mitigation;
  /// Reference-state shift subtracted from every energy.
  std::optional<double> rem_delta;
  std::uint64_t seed = 0;
};

/// Energy of a parameterized circuit against a Hamiltonian. Immutable; the
/// randomness of one evaluation depends only on (seed, eval_index).
class EnergyEvaluator {
 public:
  EnergyEvaluator(PauliHamiltonian h, Circuit circuit, EvaluatorOptions options = {});

  const PauliHamiltonian& hamiltonian() const { return h_; }
  const Circuit& circuit() const { return circuit_; }
  const EvaluatorOptions& options() const { return options_; }
  const std::vector<MeasurementGroup>& groups() const { return groups_; }
  int n_params() const { return circuit_.n_params(); }

  double evaluate(std::span<const double> theta, std::uint64_t eval_index = 0) const;

  /// Noiseless statevector expectation, ignoring every option.
  double exact(std::span<const double> theta) const;

  EnergyEvaluator with_rem(double delta) const;
  EnergyEvaluator without_rem() const;

 private:
  PauliHamiltonian h_;
  Circuit circuit_;
  EvaluatorOptions options_;
  std::vector<MeasurementGroup> groups_;
};

struct VqeOutcome {
  std::vector<double> theta;
  double energy = 0.0;
  int n_evals = 0;
  bool converged = false;
  std::vector<TracePoint> trace;
};

/// Minimizes from theta0 (empty means all zeros, the reference state).
VqeOutcome minimize(const EnergyEvaluator& ev, std::span<const double> theta0, const OptimizerConfig& cfg);

struct CosineFit {
  double c = 0.0;
  double a = 0.0;  // >= 0
  double alpha = 0.0;
  double theta_min = 0.0;  // in (-pi, pi]
  double e_min = 0.0;
  double rms_residual = 0.0;

  double operator()(double theta) const;
};

/// Least-squares fit of C + A cos(theta - alpha).
CosineFit fit_cosine(std::span<const double> theta, std::span<const double> energy);

struct SweepResult {
  std::vector<double> grid;
  std::vector<double> energies;
  CosineFit fit;
};

/// Evaluates a one-parameter evaluator on the grid (eval_index = first_index +
/// point index) and fits the cosine model.
SweepResult sweep_and_fit(const EnergyEvaluator& ev, std::span<const double> grid, std::uint64_t first_index = 0);

/// n points from -pi to pi inclusive.
std::vector<double> uniform_grid(int n = 25);

}  // namespace remsim
