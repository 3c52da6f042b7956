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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "remsim/ansatz.hpp"
#include "remsim/confusion.hpp"
#include "remsim/pauli.hpp"

namespace remsim {

/// Published exact energies of one geometry (totals, offsets included).
struct ReferenceEnergies {
  double e_exact_ref = 0.0;  // Hartree-Fock reference state
  double e_exact_min = 0.0;  // exact minimum within the ansatz
};

/// One published device run; starred fields are readout-mitigated.
struct PublishedRun {
  double r = 0.0;
  double e_exact_ref = 0.0;
  double e_vqe_ref = 0.0;
  double e_vqe_star_ref = 0.0;
  double e_exact_min = 0.0;
  double e_vqe_min = 0.0;
  double e_vqe_star_min = 0.0;
  double e_rem = 0.0;
  double e_rem_star = 0.0;
  double err_vqe = 0.0;
  double err_vqe_star = 0.0;
  double err_rem = 0.0;
  double err_rem_star = 0.0;
};

struct Geometry {
  double r = 0.0;
  double v_nn = 0.0;
  PauliHamiltonian hamiltonian;  // offset = v_nn (+ frozen core)
  std::optional<ReferenceEnergies> reference;
  std::vector<double> device_angles;  // hardware-optimized parameters, documentation only
};

struct MoleculeDataset {
  std::string name;
  int n_qubits = 0;
  int n_orbitals = 0;  // spatial orbitals before tapering
  int n_alpha = 0;
  int n_beta = 0;
  double frozen_core = 0.0;
  double equilibrium_r = 0.0;
  AnsatzFamily default_ansatz = AnsatzFamily::Uccsd;
  std::vector<Geometry> geometries;
  std::vector<PublishedRun> published_runs;

  const Geometry& at(double r) const;
  std::string hf_bitstring() const;
  /// Ansatz of the requested family for this molecule.
  AnsatzSpec ansatz(AnsatzFamily family) const;
};

/// Embedded dataset: "h2", "heh+" or "lih".
MoleculeDataset builtin(std::string_view name);
std::vector<std::string> builtin_names();

ReferenceEnergies reference_energy(const MoleculeDataset& ds, double r);

/// Summary row of the equilibrium comparison table.
struct SummaryRow {
  std::string label;
  bool simulated = false;
  double e_exact_min = 0.0;
  double e_vqe = 0.0;
  double e_rem = 0.0;
  double err_vqe = 0.0;
  double err_rem = 0.0;
};

std::vector<SummaryRow> equilibrium_summary();

/// Published circuit complexity per molecule and ansatz.
struct ComplexityRow {
  std::string molecule;
  std::string ansatz;
  int qubits = 0;
  int depth = 0;
  int two_qubit_gates = 0;
  int parameters = 0;
};

std::vector<ComplexityRow> circuit_complexity_table();

/// Two-qubit readout matrix of the superconducting device, columns normalized,
/// with its quoted per-entry fluctuations.
ConfusionMatrix device_confusion();

/// Two-qubit gate error of the same device.
inline constexpr double kDeviceCzError = 1.8e-2;
/// Chemical accuracy, 1 kcal/mol.
inline constexpr double kChemicalAccuracy = 1.6e-3;

/// Text format: `#` comments, `qubits=<n>`, `offset=<real>`, `<label> <coeff>`.
PauliHamiltonian parse_hamiltonian(std::string_view text);
PauliHamiltonian load_hamiltonian(const std::string& path);
std::string dump_hamiltonian(const PauliHamiltonian& h);

}  // namespace remsim
