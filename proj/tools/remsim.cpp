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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "remsim/experiments.hpp"
#include "remsim/kernels.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNotConverged = 3;

struct Flags {
  remsim::RunConfig cfg;
  std::string backend = "ideal";
  std::string mitigation = "none";
  std::string ansatz;
  std::string optimizer = "auto";
  std::string kernels = "auto";
  std::string out;
  std::string svg;
  double r = -1.0;
  double p1 = -1.0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--molecule", f.cfg.molecule, "Embedded dataset: h2, heh+, lih");
  cmd->add_option("--hamiltonian", f.cfg.hamiltonian_path, "Hamiltonian text file (qubits=, offset=, label coeff)");
  cmd->add_option("--r", f.r, "Geometry in angstrom (default: equilibrium)");
  cmd->add_option("--backend", f.backend, "ideal | noisy")->check(CLI::IsMember({"ideal", "noisy"}));
  cmd->add_option("--p2", f.cfg.p2, "Two-qubit depolarizing probability");
  cmd->add_option("--p1", f.p1, "Single-qubit depolarizing probability (default 0.1 * p2)");
  cmd->add_option("--shots", f.cfg.shots, "Shots per energy, split over measurement groups; 0 = exact");
  cmd->add_option("--seed", f.cfg.seed, "Master seed");
  cmd->add_option("--mitigation", f.mitigation, "none | readout | rem | readout+rem")
      ->check(CLI::IsMember({"none", "readout", "rem", "readout+rem"}));
  cmd->add_option("--confusion", f.cfg.confusion, "ideal | figure-s2 | calibrate | <csv path>");
  cmd->add_option("--ansatz", f.ansatz, "compact | uccsd | hwe")->check(CLI::IsMember({"compact", "uccsd", "hwe"}));
  cmd->add_option("--optimizer", f.optimizer, "auto | nelder-mead | spsa | sweep")
      ->check(CLI::IsMember({"auto", "nelder-mead", "spsa", "sweep"}));
  cmd->add_option("--max-evals", f.cfg.max_evals, "Optimizer evaluation budget");
  cmd->add_option("--grid", f.cfg.grid_points, "Sweep grid points over [-pi, pi]");
  cmd->add_option("--calibration-shots", f.cfg.calibration_shots, "Shots per calibration circuit");
  cmd->add_option("--calibration-repeats", f.cfg.calibration_repeats, "Calibration repetitions");
  cmd->add_option("--hf", f.cfg.hf_bitstring, "Reference bitstring for file Hamiltonians");
  cmd->add_option("--orbitals", f.cfg.orbitals, "Spatial orbitals (uccsd on a file Hamiltonian)");
  cmd->add_option("--alpha", f.cfg.alpha, "Alpha electrons");
  cmd->add_option("--beta", f.cfg.beta, "Beta electrons");
  cmd->add_option("--kernels", f.kernels, "auto | scalar | avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  cmd->add_option("--out", f.out, "Output file (default stdout)");
}

void finalize(Flags& f) {
  using remsim::OptimizerChoice;
  f.cfg.backend = f.backend == "noisy" ? remsim::BackendKind::Noisy : remsim::BackendKind::Ideal;
  f.cfg.readout_mitigation = f.mitigation == "readout" || f.mitigation == "readout+rem";
  f.cfg.rem = f.mitigation == "rem" || f.mitigation == "readout+rem";
  if (f.r >= 0.0) f.cfg.r = f.r;
  if (f.p1 >= 0.0) f.cfg.p1 = f.p1;
  if (!f.ansatz.empty()) f.cfg.ansatz = remsim::parse_ansatz_family(f.ansatz);
  static const std::map<std::string, OptimizerChoice> optimizers = {{"auto", OptimizerChoice::Auto},
                                                                    {"nelder-mead", OptimizerChoice::NelderMead},
                                                                    {"spsa", OptimizerChoice::Spsa},
                                                                    {"sweep", OptimizerChoice::Sweep}};
  f.cfg.optimizer = optimizers.at(f.optimizer);
  if (f.kernels == "scalar") remsim::kernels::select(remsim::kernels::Isa::Scalar);
  if (f.kernels == "avx2") {
    if (!remsim::kernels::avx2_table() || !remsim::kernels::cpu_supports(remsim::kernels::Isa::Avx2))
      throw remsim::ConfigError("AVX2 kernels are not available on this machine");
    remsim::kernels::select(remsim::kernels::Isa::Avx2);
  }
}

void write(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw remsim::ConfigError("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reference-state error mitigation for noisy VQE simulations"};
  app.require_subcommand(1);
  Flags f;
  std::vector<double> p2_grid;

  auto* dissociation = app.add_subcommand("dissociation", "Energy errors along a dissociation curve (CSV)");
  add_common(dissociation, f);
  dissociation->add_option("--svg", f.svg, "Also write an SVG chart");
  auto* sweep = app.add_subcommand("noise-sweep", "Errors versus two-qubit depolarizing probability (CSV)");
  add_common(sweep, f);
  sweep->add_option("--p2-grid", p2_grid, "Increasing p2 values")->delimiter(',');
  sweep->add_option("--svg", f.svg, "Also write an SVG chart");
  auto* single = app.add_subcommand("single-point", "Full REM report at one geometry");
  add_common(single, f);
  auto* calibrate = app.add_subcommand("calibrate", "Estimate a readout confusion matrix (CSV)");
  add_common(calibrate, f);
  auto* dump = app.add_subcommand("dump", "Print a Hamiltonian in the text format");
  add_common(dump, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    finalize(f);
    f.cfg.p2_grid = p2_grid;
    remsim::CommandOutput out;
    const bool want_svg = !f.svg.empty();
    if (*dissociation) out = remsim::cmd_dissociation(f.cfg, want_svg);
    else if (*sweep) out = remsim::cmd_noise_sweep(f.cfg, want_svg);
    else if (*single) out = remsim::cmd_single_point(f.cfg);
    else if (*calibrate) out = remsim::cmd_calibrate(f.cfg);
    else out = remsim::cmd_dump(f.cfg);
    write(f.out, out.text);
    if (want_svg) write(f.svg, out.svg);
    if (!out.converged) {
      std::cerr << "warning: optimizer did not meet its tolerance\n";
      return kExitNotConverged;
    }
    return 0;
  } catch (const remsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
