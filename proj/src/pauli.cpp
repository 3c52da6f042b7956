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

#include "remsim/pauli.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace remsim {
namespace {

constexpr cplx kI{0.0, 1.0};

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return 1.0;
    case 1: return kI;
    case 2: return -1.0;
    default: return -kI;
  }
}

}  // namespace

char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

PauliString PauliString::parse(std::string_view text, int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  if (static_cast<int>(text.size()) != n_qubits)
    throw std::invalid_argument("Pauli label '" + std::string(text) + "' has length " +
                                std::to_string(text.size()) + ", expected " +
                                std::to_string(n_qubits));
  PauliString p;
  p.n_ = n_qubits;
  for (int k = 0; k < n_qubits; ++k) {
    const int q = n_qubits - 1 - k;
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[k]) {
      case 'I': break;
      case 'X': p.x_ |= bit; break;
      case 'Y': p.x_ |= bit; p.z_ |= bit; break;
      case 'Z': p.z_ |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[k]) +
                                    "' in '" + std::string(text) + "'");
    }
  }
  return p;
}

PauliString PauliString::identity(int n_qubits) { return from_masks(n_qubits, 0, 0); }

PauliString PauliString::from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  const std::uint64_t keep = (std::uint64_t{1} << n_qubits) - 1;
  if ((x_mask | z_mask) & ~keep) throw std::invalid_argument("mask touches qubits beyond n");
  PauliString p;
  p.n_ = n_qubits;
  p.x_ = x_mask;
  p.z_ = z_mask;
  return p;
}

Pauli PauliString::at(int qubit) const {
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }
int PauliString::y_count() const { return std::popcount(x_ & z_); }

std::string PauliString::label() const {
  std::string s(n_, 'I');
  for (int q = 0; q < n_; ++q) s[n_ - 1 - q] = to_char(at(q));
  return s;
}

cplx PauliString::phase_on(std::uint64_t basis_index) const {
  const int sign_flips = std::popcount(basis_index & z_);
  cplx phase = i_pow(y_count());
  return (sign_flips & 1) ? -phase : phase;
}

PauliString PauliString::with(int qubit, Pauli p) const {
  PauliString out = *this;
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  out.x_ &= ~bit;
  out.z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) out.x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) out.z_ |= bit;
  return out;
}

PauliString parse_pauli(std::string_view text, int n_qubits) {
  return PauliString::parse(text, n_qubits);
}

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("Pauli length mismatch");
  // Single-qubit products: XY = iZ, YZ = iX, ZX = iY and the reverses with -i.
  int power = 0;
  for (int q = 0; q < a.n_qubits(); ++q) {
    const int pa = static_cast<int>(a.at(q));
    const int pb = static_cast<int>(b.at(q));
    if (pa == 0 || pb == 0 || pa == pb) continue;
    power += ((pb - pa + 3) % 3 == 1) ? 1 : 3;
  }
  auto c = PauliString::from_masks(a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask());
  return {i_pow(power), c};
}

bool commutes(const PauliString& a, const PauliString& b) {
  const int anti = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
  return (anti & 1) == 0;
}

PauliHamiltonian::PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms, double offset)
    : n_qubits_(n_qubits), offset_(offset) {
  if (n_qubits < 1 || n_qubits > PauliString::kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  std::map<PauliString, std::size_t> seen;
  for (auto& t : terms) {
    if (t.pauli.n_qubits() != n_qubits)
      throw std::invalid_argument("term " + t.pauli.label() + " does not act on " +
                                  std::to_string(n_qubits) + " qubits");
    auto [it, fresh] = seen.try_emplace(t.pauli, terms_.size());
    if (fresh)
      terms_.push_back(t);
    else
      terms_[it->second].coeff += t.coeff;
  }
}

PauliHamiltonian PauliHamiltonian::from_labels(
    int n_qubits, std::span<const std::pair<std::string, double>> terms, double offset) {
  std::vector<PauliTerm> parsed;
  parsed.reserve(terms.size());
  for (const auto& [label, c] : terms) parsed.push_back({PauliString::parse(label, n_qubits), c});
  return PauliHamiltonian(n_qubits, std::move(parsed), offset);
}

double PauliHamiltonian::constant_part() const {
  double c = offset_;
  for (const auto& t : terms_)
    if (t.pauli.is_identity()) c += t.coeff;
  return c;
}

double PauliHamiltonian::coefficient(std::string_view label) const {
  const auto p = PauliString::parse(label, n_qubits_);
  for (const auto& t : terms_)
    if (t.pauli == p) return t.coeff;
  return 0.0;
}

PauliHamiltonian PauliHamiltonian::with_offset(double offset) const {
  PauliHamiltonian h = *this;
  h.offset_ = offset;
  return h;
}

cplx pauli_expectation(const PauliString& p, const QuantumState& state) {
  if (p.n_qubits() != state.n_qubits()) throw std::invalid_argument("state dimension mismatch");
  const std::size_t dim = state.dim();
  const std::uint64_t x = p.x_mask();
  const auto data = state.data();
  cplx acc = 0.0;
  if (state.is_pure()) {
    // <psi|P|psi> = sum_b conj(psi[b ^ x]) phase(b) psi[b]
    for (std::size_t b = 0; b < dim; ++b) acc += std::conj(data[b ^ x]) * p.phase_on(b) * data[b];
  } else {
    // Tr(P rho) = sum_c phase(c) rho[c][c ^ x]
    for (std::size_t c = 0; c < dim; ++c) acc += p.phase_on(c) * data[c * dim + (c ^ x)];
  }
  return acc;
}

double expectation(const PauliHamiltonian& h, const QuantumState& state) {
  if (state.n_qubits() != h.n_qubits())
    throw std::invalid_argument("state has " + std::to_string(state.n_qubits()) +
                                " qubits, Hamiltonian has " + std::to_string(h.n_qubits()));
  double e = h.offset();
  for (const auto& t : h.terms()) e += t.coeff * pauli_expectation(t.pauli, state).real();
  return e;
}

Eigen::MatrixXcd to_dense_matrix(const PauliHamiltonian& h) {
  if (h.n_qubits() > kDenseQubitLimit)
    throw std::invalid_argument("dense matrix limited to " + std::to_string(kDenseQubitLimit) +
                                " qubits");
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    for (std::size_t b = 0; b < dim; ++b)
      m(b ^ t.pauli.x_mask(), b) += t.coeff * t.pauli.phase_on(b);
  }
  m.diagonal().array() += h.offset();
  return m;
}

PauliHamiltonian decompose_dense(const Eigen::MatrixXcd& m, double drop_below) {
  const auto dim = static_cast<std::size_t>(m.rows());
  if (m.cols() != m.rows() || dim < 2 || !std::has_single_bit(dim))
    throw std::invalid_argument("matrix must be square with power-of-two size");
  const int n = std::countr_zero(dim);
  if (n > 6) throw std::invalid_argument("Pauli decomposition limited to 6 qubits");
  std::vector<PauliTerm> terms;
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t z = 0; z < dim; ++z) {
      const auto p = PauliString::from_masks(n, x, z);
      // Tr(P M) = sum_b phase(b) M(b, b ^ x)
      cplx tr = 0.0;
      for (std::size_t c = 0; c < dim; ++c) tr += p.phase_on(c) * m(c, c ^ x);
      const double coeff = tr.real() / static_cast<double>(dim);
      if (std::abs(coeff) > drop_below) terms.push_back({p, coeff});
    }
  }
  return PauliHamiltonian(n, std::move(terms), 0.0);
}

GroundState ground_state_energy(const PauliHamiltonian& h) {
  const Eigen::MatrixXcd m = to_dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

bool qubitwise_compatible(const PauliString& p, const PauliString& basis) {
  for (int q = 0; q < p.n_qubits(); ++q) {
    const Pauli a = p.at(q);
    if (a != Pauli::I && a != basis.at(q)) return false;
  }
  return true;
}

std::vector<MeasurementGroup> group_terms(const PauliHamiltonian& h) {
  struct Open {
    std::vector<Pauli> letters;  // I = unassigned
    std::vector<std::size_t> members;
  };
  std::vector<Open> open;
  const int n = h.n_qubits();
  const auto terms = h.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& p = terms[i].pauli;
    bool placed = false;
    for (auto& g : open) {
      bool ok = true;
      for (int q = 0; q < n && ok; ++q) {
        const Pauli a = p.at(q);
        ok = a == Pauli::I || g.letters[q] == Pauli::I || g.letters[q] == a;
      }
      if (!ok) continue;
      for (int q = 0; q < n; ++q)
        if (p.at(q) != Pauli::I) g.letters[q] = p.at(q);
      g.members.push_back(i);
      placed = true;
      break;
    }
    if (!placed) {
      Open g{std::vector<Pauli>(n, Pauli::I), {i}};
      for (int q = 0; q < n; ++q) g.letters[q] = p.at(q);
      open.push_back(std::move(g));
    }
  }
  std::vector<MeasurementGroup> groups;
  groups.reserve(open.size());
  for (auto& g : open) {
    auto basis = PauliString::identity(n);
    for (int q = 0; q < n; ++q)
      basis = basis.with(q, g.letters[q] == Pauli::I ? Pauli::Z : g.letters[q]);
    groups.push_back({basis, std::move(g.members)});
  }
  return groups;
}

}  // namespace remsim
