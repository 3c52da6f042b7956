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

#include "remsim/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace remsim {
namespace {

using kernels::cplx;

// Pauli sum with first-appearance term order.
class PauliSum {
 public:
  explicit PauliSum(int n) : n_(n) {}

  void add(const PauliString& p, cplx c) {
    for (auto& [q, v] : terms_)
      if (q == p) {
        v += c;
        return;
      }
    terms_.emplace_back(p, c);
  }

  PauliSum operator*(const PauliSum& o) const {
    PauliSum r(n_);
    for (const auto& [a, ca] : terms_)
      for (const auto& [b, cb] : o.terms_) {
        const auto [phase, prod] = multiply(a, b);
        r.add(prod, phase * ca * cb);
      }
    return r.pruned();
  }

  PauliSum minus_adjoint() const {
    PauliSum r(n_);
    for (const auto& [p, c] : terms_) r.add(p, c);
    for (const auto& [p, c] : terms_) r.add(p, -std::conj(c));
    return r.pruned();
  }

  PauliSum pruned() const {
    PauliSum r(n_);
    for (const auto& [p, c] : terms_)
      if (std::abs(c) > 1e-12) r.terms_.emplace_back(p, c);
    return r;
  }

  const std::vector<std::pair<PauliString, cplx>>& terms() const { return terms_; }

 private:
  int n_;
  std::vector<std::pair<PauliString, cplx>> terms_;
};

// Parity-encoded ladder operator: 1/2 (X_j Z_{j-1} -/+ i Y_j) X_{>j}.
PauliSum ladder(int j, int n, bool create) {
  PauliString tail = PauliString::identity(n);
  for (int q = j + 1; q < n; ++q) tail = tail.with(q, Pauli::X);
  PauliString real = tail.with(j, Pauli::X);
  if (j > 0) real = real.with(j - 1, Pauli::Z);
  const PauliString imag = tail.with(j, Pauli::Y);
  PauliSum s(n);
  s.add(real, 0.5);
  s.add(imag, cplx(0.0, create ? -0.5 : 0.5));
  return s;
}

// Drops the two Z2-symmetry qubits, replacing Z there by its sector eigenvalue.
PauliSum taper(const PauliSum& a, int n, int n_alpha, int n_beta) {
  const int q1 = n / 2 - 1;
  const int q2 = n - 1;
  const double par1 = (n_alpha + n_beta) % 2 == 0 ? 1.0 : -1.0;
  const double par2 = n_alpha % 2 == 0 ? 1.0 : -1.0;
  PauliSum r(n - 2);
  for (const auto& [p, c0] : a.terms()) {
    cplx c = c0;
    const Pauli p1 = p.at(q1);
    const Pauli p2 = p.at(q2);
    if ((p1 != Pauli::I && p1 != Pauli::Z) || (p2 != Pauli::I && p2 != Pauli::Z))
      throw std::logic_error("excitation generator does not commute with the tapered symmetries");
    if (p1 == Pauli::Z) c *= par2;
    if (p2 == Pauli::Z) c *= par1;
    PauliString out = PauliString::identity(n - 2);
    int k = 0;
    for (int q = 0; q < n; ++q) {
      if (q == q1 || q == q2) continue;
      out = out.with(k++, p.at(q));
    }
    r.add(out, c);
  }
  return r.pruned();
}

Excitation make_excitation(Excitation::Kind kind, int param, const PauliSum& t, int n, int n_alpha,
                           int n_beta) {
  const PauliSum a = taper(t.minus_adjoint(), n, n_alpha, n_beta);
  Excitation e;
  e.kind = kind;
  e.param = param;
  for (const auto& [p, c] : a.terms()) {
    // A = i * sum_k c_k P_k with real c_k.
    const cplx ck = c / cplx(0.0, 1.0);
    if (std::abs(ck.imag()) > 1e-12) throw std::logic_error("excitation generator is not anti-Hermitian");
    e.terms.push_back({p, ck.real()});
  }
  return e;
}

void check_occupations(int n_orbitals, int n_alpha, int n_beta) {
  if (n_orbitals < 2 || 2 * n_orbitals - 2 > PauliString::kMaxQubits)
    throw std::invalid_argument("uccsd needs at least two spatial orbitals");
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_orbitals || n_beta > n_orbitals)
    throw std::invalid_argument("electron counts exceed the orbital count");
}

}  // namespace

std::string_view to_string(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::CompactUccd: return "compact";
    case AnsatzFamily::Uccsd: return "uccsd";
    case AnsatzFamily::HardwareEfficient: return "hwe";
  }
  return "?";
}

AnsatzFamily parse_ansatz_family(std::string_view s) {
  if (s == "compact" || s == "compact-uccd") return AnsatzFamily::CompactUccd;
  if (s == "uccsd") return AnsatzFamily::Uccsd;
  if (s == "hwe" || s == "hardware-efficient") return AnsatzFamily::HardwareEfficient;
  throw std::invalid_argument(fmt::format("unknown ansatz '{}' (expected compact, uccsd or hwe)", s));
}

std::vector<Excitation> uccsd_excitations(int n_orbitals, int n_alpha, int n_beta) {
  check_occupations(n_orbitals, n_alpha, n_beta);
  const int n = 2 * n_orbitals;
  std::vector<Excitation> out;
  auto single = [&](int from, int to) {
    const PauliSum t = ladder(to, n, true) * ladder(from, n, false);
    out.push_back(make_excitation(Excitation::Kind::Single, static_cast<int>(out.size()), t, n, n_alpha, n_beta));
  };
  auto pair = [&](int i, int a, int j, int b) {
    const PauliSum t = (ladder(a, n, true) * ladder(b, n, true)) * (ladder(j, n, false) * ladder(i, n, false));
    out.push_back(make_excitation(Excitation::Kind::Double, static_cast<int>(out.size()), t, n, n_alpha, n_beta));
  };
  const int beta = n_orbitals;
  for (int i = 0; i < n_alpha; ++i)
    for (int a = n_alpha; a < n_orbitals; ++a) single(i, a);
  for (int i = 0; i < n_beta; ++i)
    for (int a = n_beta; a < n_orbitals; ++a) single(beta + i, beta + a);
  for (int i = 0; i < n_alpha; ++i)
    for (int a = n_alpha; a < n_orbitals; ++a)
      for (int j = 0; j < n_beta; ++j)
        for (int b = n_beta; b < n_orbitals; ++b) pair(i, a, beta + j, beta + b);
  for (int off : {0, beta}) {
    const int occ = off == 0 ? n_alpha : n_beta;
    for (int i = 0; i < occ; ++i)
      for (int j = i + 1; j < occ; ++j)
        for (int a = occ; a < n_orbitals; ++a)
          for (int b = a + 1; b < n_orbitals; ++b) pair(off + i, off + a, off + j, off + b);
  }
  return out;
}

std::string parity_hf_bitstring(int n_orbitals, int n_alpha, int n_beta) {
  check_occupations(n_orbitals, n_alpha, n_beta);
  const int n = 2 * n_orbitals;
  std::vector<int> occ(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n_alpha; ++i) occ[static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < n_beta; ++i) occ[static_cast<std::size_t>(n_orbitals + i)] = 1;
  std::vector<int> bits;
  int parity = 0;
  for (int q = 0; q < n; ++q) {
    parity ^= occ[static_cast<std::size_t>(q)];
    if (q == n_orbitals - 1 || q == n - 1) continue;
    bits.push_back(parity);
  }
  std::string label;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) label += *it ? '1' : '0';
  return label;
}

void AnsatzSpec::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("ansatz needs at least one qubit");
  if (static_cast<int>(hf_bitstring.size()) != n_qubits ||
      hf_bitstring.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument(fmt::format("hf bitstring '{}' is not a {}-bit label", hf_bitstring, n_qubits));
  int expected = 0;
  switch (family) {
    case AnsatzFamily::CompactUccd:
      if (n_qubits != 2) throw std::invalid_argument("compact ansatz is defined on two qubits");
      expected = 1;
      break;
    case AnsatzFamily::Uccsd:
      expected = static_cast<int>(excitations.size());
      for (std::size_t k = 0; k < excitations.size(); ++k) {
        if (excitations[k].param != static_cast<int>(k))
          throw std::invalid_argument("excitation parameters must be numbered in order");
        for (const auto& t : excitations[k].terms)
          if (t.pauli.n_qubits() != n_qubits) throw std::invalid_argument("excitation acts on the wrong register");
      }
      break;
    case AnsatzFamily::HardwareEfficient:
      for (const auto& [a, b] : entangler_map)
        if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits || a == b)
          throw std::invalid_argument(fmt::format("bad entangler pair ({}, {})", a, b));
      expected = hardware_efficient_param_count(n_qubits, n_layers, rotations);
      break;
  }
  if (n_params != expected)
    throw std::invalid_argument(fmt::format("{} ansatz has {} parameters, spec says {}", to_string(family),
                                            expected, n_params));
}

AnsatzSpec compact_spec() {
  AnsatzSpec s;
  s.family = AnsatzFamily::CompactUccd;
  s.n_qubits = 2;
  s.n_params = 1;
  s.hf_bitstring = "01";
  return s;
}

AnsatzSpec uccsd_spec(int n_orbitals, int n_alpha, int n_beta) {
  AnsatzSpec s;
  s.family = AnsatzFamily::Uccsd;
  s.n_qubits = 2 * n_orbitals - 2;
  s.excitations = uccsd_excitations(n_orbitals, n_alpha, n_beta);
  s.n_params = static_cast<int>(s.excitations.size());
  s.hf_bitstring = parity_hf_bitstring(n_orbitals, n_alpha, n_beta);
  return s;
}

AnsatzSpec hardware_efficient_spec(int n_qubits, int n_layers, std::vector<std::pair<int, int>> entangler_map,
                                   RotationPattern rotations, std::string hf_bitstring) {
  AnsatzSpec s;
  s.family = AnsatzFamily::HardwareEfficient;
  s.n_qubits = n_qubits;
  s.n_layers = n_layers;
  s.entangler_map = std::move(entangler_map);
  s.rotations = rotations;
  s.n_params = hardware_efficient_param_count(n_qubits, n_layers, rotations);
  s.hf_bitstring = std::move(hf_bitstring);
  s.validate();
  return s;
}

std::vector<std::pair<int, int>> t_shaped_map() { return {{0, 1}, {1, 2}, {1, 3}}; }

int hardware_efficient_param_count(int n_qubits, int n_layers, RotationPattern rotations) {
  if (n_layers < 0) throw std::invalid_argument("layer count must be non-negative");
  const int per_qubit = rotations == RotationPattern::RY ? 1 : 2;
  return per_qubit * n_qubits * (n_layers + 1);
}

Circuit hartree_fock_circuit(const AnsatzSpec& spec) {
  Circuit c(spec.n_qubits);
  const int n = spec.n_qubits;
  for (int q = 0; q < n; ++q)
    if (spec.hf_bitstring.at(static_cast<std::size_t>(n - 1 - q)) == '1') c.x(q);
  return c;
}

Circuit h2_compact_circuit() {
  Circuit c(2);
  const int t = c.add_parameter("theta");
  c.x(0);
  c.ry(1, Angle::of(t, -1.0));
  c.cnot(1, 0);
  return c;
}

void append_pauli_exponential(Circuit& c, const PauliString& p, Angle angle) {
  std::vector<int> support;
  for (int q = 0; q < p.n_qubits(); ++q)
    if (p.at(q) != Pauli::I) support.push_back(q);
  if (support.empty()) throw std::invalid_argument("identity exponential is a global phase");
  const double half_pi = std::numbers::pi / 2.0;
  for (int q : support) {
    if (p.at(q) == Pauli::X) c.h(q);
    if (p.at(q) == Pauli::Y) c.rx(q, Angle::fixed(half_pi));
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) c.cnot(support[k], support[k + 1]);
  c.rz(support.back(), angle);
  for (std::size_t k = support.size() - 1; k > 0; --k) c.cnot(support[k - 1], support[k]);
  for (int q : support) {
    if (p.at(q) == Pauli::X) c.h(q);
    if (p.at(q) == Pauli::Y) c.rx(q, Angle::fixed(-half_pi));
  }
}

Circuit ucc_circuit(const AnsatzSpec& spec, const std::vector<Excitation>& excitations) {
  Circuit c = hartree_fock_circuit(spec);
  for (std::size_t k = 0; k < excitations.size(); ++k) {
    const int param = c.add_parameter(fmt::format("theta[{}]", k));
    // exp(i theta c P) = exp(-i (-2 c theta) / 2 P)
    for (const auto& t : excitations[k].terms) append_pauli_exponential(c, t.pauli, Angle::of(param, -2.0 * t.coeff));
  }
  return c;
}

Circuit hardware_efficient_circuit(int n_qubits, int n_layers, const std::vector<std::pair<int, int>>& entangler_map,
                                   RotationPattern rotations) {
  Circuit c(n_qubits);
  int next = 0;
  auto rotation_layer = [&] {
    for (int q = 0; q < n_qubits; ++q) c.ry(q, Angle::of(c.add_parameter(fmt::format("theta[{}]", next++))));
    if (rotations == RotationPattern::RYRZ)
      for (int q = 0; q < n_qubits; ++q) c.rz(q, Angle::of(c.add_parameter(fmt::format("theta[{}]", next++))));
  };
  rotation_layer();
  for (int layer = 0; layer < n_layers; ++layer) {
    for (const auto& [a, b] : entangler_map) c.cz(a, b);
    rotation_layer();
  }
  return c;
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case AnsatzFamily::CompactUccd:
      if (spec.hf_bitstring != "01") throw std::invalid_argument("compact ansatz starts from |01>");
      return h2_compact_circuit();
    case AnsatzFamily::Uccsd:
      return ucc_circuit(spec, spec.excitations);
    case AnsatzFamily::HardwareEfficient: {
      Circuit c = hartree_fock_circuit(spec);
      c.append(hardware_efficient_circuit(spec.n_qubits, spec.n_layers, spec.entangler_map, spec.rotations));
      return c;
    }
  }
  throw std::logic_error("unreachable");
}

CircuitStats circuit_stats(const Circuit& c) {
  std::vector<int> level(static_cast<std::size_t>(c.n_qubits()), 0);
  CircuitStats s;
  for (const auto& g : c.gates()) {
    int l = 0;
    for (int q : g.qubits) l = std::max(l, level[static_cast<std::size_t>(q)]);
    for (int q : g.qubits) level[static_cast<std::size_t>(q)] = l + 1;
    if (g.qubits.size() == 2) ++s.two_qubit_gates;
  }
  s.depth = level.empty() ? 0 : *std::max_element(level.begin(), level.end());
  s.n_params = c.n_params();
  return s;
}

}  // namespace remsim
