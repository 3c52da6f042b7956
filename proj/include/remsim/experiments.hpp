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
#include <string>
#include <vector>

#include "remsim/ansatz.hpp"
#include "remsim/chemdata.hpp"
#include "remsim/mitigation.hpp"
#include "remsim/vqe.hpp"

namespace remsim {

/// Raised for invalid flag combinations; maps to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class OptimizerChoice { Auto, NelderMead, Spsa, Sweep };

struct RunConfig {
  std::string molecule;          // builtin dataset name
  std::string hamiltonian_path;  // alternative to molecule
  std::optional<double> r;       // geometry; default equilibrium
  BackendKind backend = BackendKind::Ideal;
  double p2 = 0.0;
  std::optional<double> p1;  // default 0.1 * p2
  std::uint64_t shots = 5000;
  std::uint64_t seed = 42;
  bool readout_mitigation = false;
  bool rem = false;
  std::string confusion = "ideal";  // ideal | figure-s2 | calibrate | <csv path>
  std::optional<AnsatzFamily> ansatz;
  OptimizerChoice optimizer = OptimizerChoice::Auto;
  int max_evals = 2000;
  int grid_points = 25;
  std::vector<double> p2_grid;
  std::uint64_t calibration_shots = 1000;
  int calibration_repeats = 100;
  // Reference state and UCCSD shape for file-loaded Hamiltonians.
  std::string hf_bitstring;
  int orbitals = 0;
  int alpha = 0;
  int beta = 0;

  double effective_p1() const { return p1 ? *p1 : 0.1 * p2; }

  /// Throws ConfigError before any simulation starts.
  void validate() const;
};

/// Everything computed at one geometry.
struct PointResult {
  double r = 0.0;
  double e_exact_ref = 0.0;
  double e_exact_min = 0.0;
  double e_vqe_ref = 0.0;
  double e_vqe = 0.0;
  double e_vqe_readout_ref = 0.0;
  double e_vqe_readout = 0.0;
  double e_rem = 0.0;
  double e_readout_rem = 0.0;
  double err_vqe = 0.0;
  double err_readout = 0.0;
  double err_rem = 0.0;
  double err_readout_rem = 0.0;
  bool converged = true;
  int n_evals = 0;
};

/// A resolved problem: Hamiltonian, ansatz and evaluator options.
struct Problem {
  PauliHamiltonian hamiltonian;
  AnsatzSpec ansatz;
  double r = 0.0;
};

/// Resolves the Hamiltonian(s) the config refers to.
std::vector<Problem> resolve_problems(const RunConfig& cfg, bool all_geometries);

/// Readout noise applied by the noisy backend, if any.
std::optional<ConfusionMatrix> readout_truth(const RunConfig& cfg, int n_qubits);
/// Matrix used to unfold outcomes when readout mitigation is on.
std::optional<ConfusionMatrix> mitigation_matrix(const RunConfig& cfg, int n_qubits);

/// Runs the reference evaluation, noisy and noiseless minimizations and both
/// REM pipelines at one geometry.
PointResult run_point(const Problem& problem, const RunConfig& cfg, double p2, double p1, std::uint64_t seed);

struct CommandOutput {
  std::string text;      // CSV, report or matrix
  std::string svg;       // empty unless requested
  bool converged = true;
};

CommandOutput cmd_dissociation(const RunConfig& cfg, bool want_svg = false);
CommandOutput cmd_noise_sweep(const RunConfig& cfg, bool want_svg = false);
CommandOutput cmd_single_point(const RunConfig& cfg);
CommandOutput cmd_calibrate(const RunConfig& cfg);
CommandOutput cmd_dump(const RunConfig& cfg);

RemReport to_rem_report(const PointResult& p, bool readout);

std::vector<double> default_p2_grid();

// SVG line charts.
struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::optional<double> band;   // shaded region |y| <= band
  std::optional<double> marker_x;  // vertical reference line
};

std::string render_svg(const std::vector<Series>& series, const ChartOptions& opts);

}  // namespace remsim
