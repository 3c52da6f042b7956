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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "remsim/kernels.hpp"

namespace remsim {

enum class GateKind { RX, RY, RZ, U1, U2, U3, X, H, CZ, CNOT };

std::string_view to_string(GateKind kind);
int arity(GateKind kind);
int angle_count(GateKind kind);

/// Gate angle: constant + scale * theta[param] (param < 0 means constant only).
struct Angle {
  double constant = 0.0;
  int param = -1;
  double scale = 1.0;

  static Angle fixed(double value) { return {value, -1, 1.0}; }
  static Angle of(int param, double scale = 1.0, double constant = 0.0) {
    return {constant, param, scale};
  }

  bool is_free() const { return param >= 0; }
  double value(std::span<const double> theta) const;
};

struct Gate {
  GateKind kind;
  std::vector<int> qubits;  // CNOT: {control, target}
  std::vector<Angle> angles;
};

/// Single-qubit gate matrix for bound angles.
kernels::Mat2 gate_matrix_1q(GateKind kind, std::span<const double> angles);

/// Two-qubit gate matrix, local index (bit of qubits[0] << 1) | bit of qubits[1].
kernels::Mat4 gate_matrix_2q(GateKind kind);

/// Ordered gate list over n qubits with named free parameters.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::span<const Gate> gates() const { return gates_; }
  int n_params() const { return static_cast<int>(param_names_.size()); }
  const std::vector<std::string>& parameter_names() const { return param_names_; }

  /// Registers a free angle and returns its index.
  int add_parameter(std::string name);

  /// Validates qubit indices, distinctness, angle count and parameter indices.
  Circuit& add(Gate gate);

  Circuit& x(int q) { return add({GateKind::X, {q}, {}}); }
  Circuit& h(int q) { return add({GateKind::H, {q}, {}}); }
  Circuit& rx(int q, Angle a) { return add({GateKind::RX, {q}, {a}}); }
  Circuit& ry(int q, Angle a) { return add({GateKind::RY, {q}, {a}}); }
  Circuit& rz(int q, Angle a) { return add({GateKind::RZ, {q}, {a}}); }
  Circuit& cz(int a, int b) { return add({GateKind::CZ, {a, b}, {}}); }
  Circuit& cnot(int control, int target) { return add({GateKind::CNOT, {control, target}, {}}); }

  /// Appends another circuit's gates; its parameters are added after ours.
  Circuit& append(const Circuit& other);

  /// Throws std::invalid_argument unless theta has exactly n_params() entries.
  void check_bindings(std::span<const double> theta) const;

  /// Orders named bindings into a parameter vector; throws on a missing name.
  std::vector<double> resolve(const std::map<std::string, double>& named) const;

  /// Copy with all angles fixed to their values under theta.
  Circuit bind(std::span<const double> theta) const;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
  std::vector<std::string> param_names_;
};

}  // namespace remsim
