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

#include "remsim/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace remsim {
namespace {

using kernels::cplx;
constexpr cplx kI{0.0, 1.0};

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
    case GateKind::U3: return "u3";
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::CZ: return "cz";
    case GateKind::CNOT: return "cnot";
  }
  return "?";
}

int arity(GateKind kind) { return (kind == GateKind::CZ || kind == GateKind::CNOT) ? 2 : 1; }

int angle_count(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::U1: return 1;
    case GateKind::U2: return 2;
    case GateKind::U3: return 3;
    default: return 0;
  }
}

double Angle::value(std::span<const double> theta) const {
  if (param < 0) return constant;
  return constant + scale * theta[static_cast<std::size_t>(param)];
}

kernels::Mat2 gate_matrix_1q(GateKind kind, std::span<const double> a) {
  auto u3 = [](double t, double phi, double lam) -> kernels::Mat2 {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {cplx(c), -std::exp(kI * lam) * s, std::exp(kI * phi) * s,
            std::exp(kI * (phi + lam)) * c};
  };
  switch (kind) {
    case GateKind::RX: {
      const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
      return {cplx(c), -kI * s, -kI * s, cplx(c)};
    }
    case GateKind::RY: {
      const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
      return {cplx(c), cplx(-s), cplx(s), cplx(c)};
    }
    case GateKind::RZ:
      return {std::exp(-kI * (a[0] / 2)), 0.0, 0.0, std::exp(kI * (a[0] / 2))};
    case GateKind::U1: return {1.0, 0.0, 0.0, std::exp(kI * a[0])};
    case GateKind::U2: return u3(M_PI / 2, a[0], a[1]);
    case GateKind::U3: return u3(a[0], a[1], a[2]);
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {cplx(r), cplx(r), cplx(r), cplx(-r)};
    }
    default: throw std::invalid_argument("not a single-qubit gate");
  }
}

kernels::Mat4 gate_matrix_2q(GateKind kind) {
  kernels::Mat4 m{};
  switch (kind) {
    case GateKind::CZ:
      m[0] = m[5] = m[10] = 1.0;
      m[15] = -1.0;
      return m;
    case GateKind::CNOT:
      // Control is the high local bit: |10> <-> |11>.
      m[0] = m[5] = 1.0;
      m[2 * 4 + 3] = m[3 * 4 + 2] = 1.0;
      return m;
    default: throw std::invalid_argument("not a two-qubit gate");
  }
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("qubit count out of range");
}

int Circuit::add_parameter(std::string name) {
  for (const auto& existing : param_names_)
    if (existing == name) throw std::invalid_argument("duplicate parameter name " + name);
  param_names_.push_back(std::move(name));
  return n_params() - 1;
}

Circuit& Circuit::add(Gate gate) {
  if (static_cast<int>(gate.qubits.size()) != arity(gate.kind))
    throw std::invalid_argument(std::string(to_string(gate.kind)) + ": wrong qubit count");
  if (static_cast<int>(gate.angles.size()) != angle_count(gate.kind))
    throw std::invalid_argument(std::string(to_string(gate.kind)) + ": wrong angle count");
  for (int q : gate.qubits)
    if (q < 0 || q >= n_qubits_)
      throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
  if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1])
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  for (const auto& a : gate.angles)
    if (a.param >= n_params()) throw std::invalid_argument("angle refers to unknown parameter");
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  const int shift = n_params();
  for (const auto& name : other.param_names_) add_parameter(name);
  for (Gate g : other.gates_) {
    for (auto& a : g.angles)
      if (a.is_free()) a.param += shift;
    gates_.push_back(std::move(g));
  }
  return *this;
}

void Circuit::check_bindings(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != n_params())
    throw std::invalid_argument("circuit has " + std::to_string(n_params()) +
                                " free parameters, got " + std::to_string(theta.size()) +
                                " bindings");
}

std::vector<double> Circuit::resolve(const std::map<std::string, double>& named) const {
  std::vector<double> theta;
  theta.reserve(param_names_.size());
  for (const auto& name : param_names_) {
    auto it = named.find(name);
    if (it == named.end()) throw std::invalid_argument("unbound parameter " + name);
    theta.push_back(it->second);
  }
  return theta;
}

Circuit Circuit::bind(std::span<const double> theta) const {
  check_bindings(theta);
  Circuit out(n_qubits_);
  for (Gate g : gates_) {
    for (auto& a : g.angles) a = Angle::fixed(a.value(theta));
    out.gates_.push_back(std::move(g));
  }
  return out;
}

}  // namespace remsim
