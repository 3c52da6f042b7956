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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "remsim/circuit.hpp"
#include "remsim/pauli.hpp"

namespace remsim {

enum class AnsatzFamily { CompactUccd, Uccsd, HardwareEfficient };
enum class RotationPattern { RY, RYRZ };

std::string_view to_string(AnsatzFamily f);
AnsatzFamily parse_ansatz_family(std::string_view s);

/// One excitation operator exp(theta * sum_k c_k i P_k), realized as a product
/// of single-string exponentials in listed order.
struct Excitation {
  enum class Kind { Single, Double };
  Kind kind = Kind::Single;
  int param = 0;
  std::vector<PauliTerm> terms;
};

/// Parity-mapped UCCSD generators with the two symmetry qubits tapered off.
/// Spin orbitals: alpha 0..n_orbitals-1, beta n_orbitals..2n_orbitals-1, the
/// lowest n_alpha / n_beta of each spin occupied. Acts on 2*n_orbitals - 2 qubits.
std::vector<Excitation> uccsd_excitations(int n_orbitals, int n_alpha, int n_beta);

/// Hartree-Fock label (leftmost = highest qubit) in the tapered parity encoding.
std::string parity_hf_bitstring(int n_orbitals, int n_alpha, int n_beta);

struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::CompactUccd;
  int n_qubits = 0;
  int n_params = 0;
  std::string hf_bitstring;
  std::vector<Excitation> excitations;               // uccsd
  int n_layers = 0;                                  // hardware-efficient
  std::vector<std::pair<int, int>> entangler_map;    // hardware-efficient
  RotationPattern rotations = RotationPattern::RY;   // hardware-efficient

  /// Throws std::invalid_argument when the fields disagree.
  void validate() const;
};

AnsatzSpec compact_spec();
AnsatzSpec uccsd_spec(int n_orbitals, int n_alpha, int n_beta);
AnsatzSpec hardware_efficient_spec(int n_qubits, int n_layers, std::vector<std::pair<int, int>> entangler_map,
                                   RotationPattern rotations, std::string hf_bitstring);

/// T-shaped four-qubit connectivity: 1 coupled to 0, 2 and 3.
std::vector<std::pair<int, int>> t_shaped_map();

int hardware_efficient_param_count(int n_qubits, int n_layers, RotationPattern rotations);

Circuit hartree_fock_circuit(const AnsatzSpec& spec);

/// X(q0), RY(-theta)(q1), CNOT(q1 -> q0): cos(theta/2)|01> - sin(theta/2)|10>.
Circuit h2_compact_circuit();

/// Appends exp(-i angle/2 * P) for a non-identity P.
void append_pauli_exponential(Circuit& c, const PauliString& p, Angle angle);

/// HF preparation followed by one Trotter step over the excitations.
Circuit ucc_circuit(const AnsatzSpec& spec, const std::vector<Excitation>& excitations);

/// Rotation layers alternating with CZ layers over entangler_map, no state preparation.
Circuit hardware_efficient_circuit(int n_qubits, int n_layers, const std::vector<std::pair<int, int>>& entangler_map,
                                   RotationPattern rotations = RotationPattern::RY);

/// Full parameterized circuit for a spec; all-zero parameters give the HF state.
Circuit build_ansatz(const AnsatzSpec& spec);

struct CircuitStats {
  int depth = 0;
  int two_qubit_gates = 0;
  int n_params = 0;
  friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
};

CircuitStats circuit_stats(const Circuit& c);

}  // namespace remsim
