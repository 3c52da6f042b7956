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

#include "remsim/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace remsim {
namespace {

kernels::Mat2 conj(const kernels::Mat2& m) {
  kernels::Mat2 out;
  for (std::size_t k = 0; k < m.size(); ++k) out[k] = std::conj(m[k]);
  return out;
}

kernels::Mat4 conj(const kernels::Mat4& m) {
  kernels::Mat4 out;
  for (std::size_t k = 0; k < m.size(); ++k) out[k] = std::conj(m[k]);
  return out;
}

void apply_1q(QuantumState& s, int q, const kernels::Mat2& m) {
  const auto& k = kernels::active();
  if (s.is_pure()) {
    k.apply_1q(s.data(), static_cast<unsigned>(q), m);
  } else {
    // U rho U^dagger: U on the row index, conj(U) on the column index.
    const auto n = static_cast<unsigned>(s.n_qubits());
    k.apply_1q(s.data(), static_cast<unsigned>(q) + n, m);
    k.apply_1q(s.data(), static_cast<unsigned>(q), conj(m));
  }
}

void apply_2q(QuantumState& s, int qa, int qb, const kernels::Mat4& m) {
  const auto& k = kernels::active();
  const auto a = static_cast<unsigned>(qa);
  const auto b = static_cast<unsigned>(qb);
  if (s.is_pure()) {
    k.apply_2q(s.data(), a, b, m);
  } else {
    const auto n = static_cast<unsigned>(s.n_qubits());
    k.apply_2q(s.data(), a + n, b + n, m);
    k.apply_2q(s.data(), a, b, conj(m));
  }
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> cumulative(std::span<const double> p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += std::max(p[i], 0.0);
    cdf[i] = acc;
  }
  if (acc <= 0.0) throw std::invalid_argument("distribution has no mass");
  for (double& c : cdf) c /= acc;
  cdf.back() = 1.0;
  return cdf;
}

std::size_t draw(const std::vector<double>& cdf, std::mt19937_64& rng) {
  const double u = uniform01(rng);
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

NoiseModel NoiseModel::depolarizing(double p2) { return depolarizing(p2, 0.1 * p2); }

NoiseModel NoiseModel::depolarizing(double p2, double p1) {
  NoiseModel m;
  m.p2 = p2;
  m.p1 = p1;
  m.validate();
  return m;
}

void NoiseModel::validate() const {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
}

Counts::Counts(int n_qubits, std::vector<std::uint64_t> tallies)
    : n_qubits_(n_qubits), tallies_(std::move(tallies)) {
  if (n_qubits < 1 || tallies_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("counts vector must have 2^n entries");
}

Counts Counts::from_map(int n_qubits, const std::map<std::string, std::uint64_t>& by_label) {
  std::vector<std::uint64_t> t(std::size_t{1} << n_qubits);
  for (const auto& [label, count] : by_label) {
    if (static_cast<int>(label.size()) != n_qubits)
      throw std::invalid_argument("outcome label " + label + " has wrong length");
    std::size_t idx = 0;
    for (char ch : label) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("outcome label " + label + " is not binary");
      idx = (idx << 1) | static_cast<std::size_t>(ch == '1');
    }
    t[idx] += count;
  }
  return Counts(n_qubits, std::move(t));
}

std::uint64_t Counts::shots() const {
  std::uint64_t s = 0;
  for (auto t : tallies_) s += t;
  return s;
}

std::uint64_t Counts::at(std::string_view label) const {
  if (static_cast<int>(label.size()) != n_qubits_) throw std::invalid_argument("label length");
  std::size_t idx = 0;
  for (char ch : label) idx = (idx << 1) | static_cast<std::size_t>(ch == '1');
  return tallies_[idx];
}

std::vector<double> Counts::frequencies() const {
  const double total = static_cast<double>(shots());
  if (total == 0.0) throw std::invalid_argument("empty counts");
  std::vector<double> f(tallies_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(tallies_[i]) / total;
  return f;
}

std::map<std::string, std::uint64_t> Counts::to_map() const {
  std::map<std::string, std::uint64_t> m;
  for (std::size_t i = 0; i < tallies_.size(); ++i)
    if (tallies_[i] > 0) m[outcome_label(i, n_qubits_)] = tallies_[i];
  return m;
}

std::string outcome_label(std::size_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q)
    if ((index >> q) & 1U) s[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
  return s;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

void apply_gate(QuantumState& state, const Gate& gate, std::span<const double> theta) {
  if (arity(gate.kind) == 1) {
    double angles[3] = {0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < gate.angles.size(); ++k) angles[k] = gate.angles[k].value(theta);
    apply_1q(state, gate.qubits[0],
             gate_matrix_1q(gate.kind, std::span<const double>(angles, gate.angles.size())));
  } else {
    apply_2q(state, gate.qubits[0], gate.qubits[1], gate_matrix_2q(gate.kind));
  }
}

void apply_depolarizing_1q(QuantumState& rho, int qubit, double p) {
  if (rho.is_pure()) throw std::invalid_argument("depolarizing channel needs a density matrix");
  check_probability(p, "p1");
  kernels::active().depolarize_1q(rho.data(), static_cast<unsigned>(rho.n_qubits()),
                                  static_cast<unsigned>(qubit), p);
}

void apply_depolarizing_2q(QuantumState& rho, int qa, int qb, double p) {
  if (rho.is_pure()) throw std::invalid_argument("depolarizing channel needs a density matrix");
  check_probability(p, "p2");
  kernels::active().depolarize_2q(rho.data(), static_cast<unsigned>(rho.n_qubits()),
                                  static_cast<unsigned>(qa), static_cast<unsigned>(qb), p);
}

QuantumState run_statevector(const Circuit& c, std::span<const double> theta) {
  c.check_bindings(theta);
  auto state = QuantumState::basis(c.n_qubits(), 0);
  for (const auto& g : c.gates()) apply_gate(state, g, theta);
  return state;
}

QuantumState run_statevector(const Circuit& c, const std::map<std::string, double>& named) {
  const auto theta = c.resolve(named);
  return run_statevector(c, theta);
}

QuantumState run_density(const Circuit& c, std::span<const double> theta, const NoiseModel& noise) {
  c.check_bindings(theta);
  noise.validate();
  auto rho = QuantumState::basis(c.n_qubits(), 0, QuantumState::Kind::Mixed);
  for (const auto& g : c.gates()) {
    apply_gate(rho, g, theta);
    if (arity(g.kind) == 1) {
      if (noise.p1 > 0.0) apply_depolarizing_1q(rho, g.qubits[0], noise.p1);
    } else if (noise.p2 > 0.0) {
      apply_depolarizing_2q(rho, g.qubits[0], g.qubits[1], noise.p2);
    }
  }
  return rho;
}

kernels::Mat2 basis_change(Pauli p) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (p) {
    case Pauli::X: return {cplx(r), cplx(r), cplx(r), cplx(-r)};  // H
    case Pauli::Y: return {cplx(r), cplx(0, -r), cplx(r), cplx(0, r)};  // H S^dagger
    default: return {1.0, 0.0, 0.0, 1.0};
  }
}

std::vector<double> measurement_distribution(const QuantumState& state, const PauliString& basis) {
  if (basis.n_qubits() != state.n_qubits())
    throw std::invalid_argument("basis " + basis.label() + " does not match state size");
  if (basis.is_diagonal()) return state.probabilities();
  QuantumState rotated = state;
  for (int q = 0; q < basis.n_qubits(); ++q) {
    const Pauli p = basis.at(q);
    if (p == Pauli::X || p == Pauli::Y) apply_1q(rotated, q, basis_change(p));
  }
  auto probs = rotated.probabilities();
  for (double& x : probs) x = std::max(x, 0.0);
  return probs;
}

Counts sample_distribution(std::span<const double> p, int n_qubits, std::uint64_t shots,
                           std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (p.size() != (std::size_t{1} << n_qubits)) throw std::invalid_argument("distribution size");
  const auto cdf = cumulative(p);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> t(p.size());
  for (std::uint64_t s = 0; s < shots; ++s) ++t[draw(cdf, rng)];
  return Counts(n_qubits, std::move(t));
}

Counts sample_counts(const QuantumState& state, const PauliString& basis, std::uint64_t shots,
                     std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  const auto p = measurement_distribution(state, basis);
  return sample_distribution(p, state.n_qubits(), shots, seed);
}

Counts apply_readout_noise(const Counts& counts, const ConfusionMatrix& c, std::uint64_t seed) {
  if (c.n_qubits() != counts.n_qubits())
    throw std::invalid_argument("confusion matrix is " + std::to_string(c.n_qubits()) +
                                "-qubit, counts are " + std::to_string(counts.n_qubits()) + "-qubit");
  const std::size_t dim = c.dim();
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(dim);
  std::vector<double> column(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::uint64_t k = counts[i];
    if (k == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) column[j] = c(j, i);
    const auto cdf = cumulative(column);
    for (std::uint64_t s = 0; s < k; ++s) ++out[draw(cdf, rng)];
  }
  return Counts(counts.n_qubits(), std::move(out));
}

double expectation_from_distribution(std::span<const double> p, const MeasurementGroup& group,
                                     const PauliHamiltonian& h) {
  if (p.size() != (std::size_t{1} << h.n_qubits())) throw std::invalid_argument("distribution size");
  const auto terms = h.terms();
  double e = 0.0;
  for (std::size_t idx : group.members) {
    const auto& term = terms[idx];
    if (!qubitwise_compatible(term.pauli, group.basis))
      throw std::invalid_argument("term " + term.pauli.label() + " is not measurable in basis " +
                                  group.basis.label());
    if (term.pauli.is_identity()) continue;
    const std::uint64_t support = term.pauli.x_mask() | term.pauli.z_mask();
    double mean = 0.0;
    for (std::size_t b = 0; b < p.size(); ++b)
      mean += (std::popcount(b & support) & 1) ? -p[b] : p[b];
    e += term.coeff * mean;
  }
  return e;
}

double expectation_from_counts(const Counts& counts, const MeasurementGroup& group,
                               const PauliHamiltonian& h) {
  const auto f = counts.frequencies();
  return expectation_from_distribution(f, group, h);
}

}  // namespace remsim
