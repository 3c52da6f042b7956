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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "remsim/ansatz.hpp"
#include "remsim/sim.hpp"

namespace {

using oracle::Mat;
using oracle::Vec;
using remsim::AnsatzFamily;

Vec amplitudes(const remsim::QuantumState& s) {
  Vec v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s.data()[i];
  return v;
}

// Jordan-Wigner annihilator on mode j of n modes: Z on lower modes.
Mat jw_annihilator(int j, int n) {
  Mat lower(2, 2);
  lower << 0, 1, 0, 0;
  const Mat z = oracle::pauli('Z');
  Mat out = Mat::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    const Mat f = q == j ? lower : q < j ? z : Mat::Identity(2, 2);
    out = oracle::kron(out, f);
  }
  return out;
}

// Occupation basis index -> parity basis index (bit q = parity of modes 0..q).
std::size_t to_parity(std::size_t occ, int n) {
  std::size_t out = 0;
  int parity = 0;
  for (int q = 0; q < n; ++q) {
    parity ^= static_cast<int>(occ >> q & 1U);
    out |= static_cast<std::size_t>(parity) << q;
  }
  return out;
}

// Generator T - T^dagger in the parity encoding, restricted to the sector with
// fixed alpha parity and total parity and relabeled on the remaining qubits.
Mat tapered_generator(const Mat& t, int norb, int na, int nb) {
  const int n = 2 * norb;
  const Mat a = t - t.adjoint();
  const auto dim = static_cast<std::size_t>(a.rows());
  Mat perm = Mat::Zero(a.rows(), a.cols());
  for (std::size_t b = 0; b < dim; ++b) perm(static_cast<Eigen::Index>(to_parity(b, n)), static_cast<Eigen::Index>(b)) = 1;
  const Mat ap = perm * a * perm.adjoint();
  const int t1 = norb - 1;
  const int t2 = n - 1;
  std::vector<std::size_t> full;
  for (std::size_t r = 0; r < (std::size_t{1} << (n - 2)); ++r) {
    std::size_t f = 0;
    int src = 0;
    for (int q = 0; q < n; ++q) {
      std::size_t bit = 0;
      if (q == t1) bit = static_cast<std::size_t>(na % 2);
      else if (q == t2) bit = static_cast<std::size_t>((na + nb) % 2);
      else bit = r >> src++ & 1U;
      f |= bit << q;
    }
    full.push_back(f);
  }
  const auto k = static_cast<Eigen::Index>(full.size());
  Mat block(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c)
      block(r, c) = ap(static_cast<Eigen::Index>(full[static_cast<std::size_t>(r)]),
                       static_cast<Eigen::Index>(full[static_cast<std::size_t>(c)]));
  return block;
}

std::vector<Mat> oracle_generators(int norb, int na, int nb) {
  const int n = 2 * norb;
  std::vector<Mat> ann;
  for (int j = 0; j < n; ++j) ann.push_back(jw_annihilator(j, n));
  auto cr = [&](int j) { return Mat(ann[static_cast<std::size_t>(j)].adjoint()); };
  std::vector<Mat> out;
  const int beta = norb;
  for (int i = 0; i < na; ++i)
    for (int a = na; a < norb; ++a) out.push_back(tapered_generator(cr(a) * ann[i], norb, na, nb));
  for (int i = 0; i < nb; ++i)
    for (int a = nb; a < norb; ++a)
      out.push_back(tapered_generator(cr(beta + a) * ann[beta + i], norb, na, nb));
  auto dbl = [&](int i, int a, int j, int b) {
    out.push_back(tapered_generator(cr(a) * cr(b) * ann[j] * ann[i], norb, na, nb));
  };
  for (int i = 0; i < na; ++i)
    for (int a = na; a < norb; ++a)
      for (int j = 0; j < nb; ++j)
        for (int b = nb; b < norb; ++b) dbl(i, a, beta + j, beta + b);
  for (int off : {0, beta}) {
    const int occ = off == 0 ? na : nb;
    for (int i = 0; i < occ; ++i)
      for (int j = i + 1; j < occ; ++j)
        for (int a = occ; a < norb; ++a)
          for (int b = a + 1; b < norb; ++b) dbl(off + i, off + a, off + j, off + b);
  }
  return out;
}

Mat generator_matrix(const remsim::Excitation& e, int n) {
  Mat m = Mat::Zero(1 << n, 1 << n);
  for (const auto& t : e.terms) m += oracle::cd(0, t.coeff) * oracle::label_matrix(t.pauli.label());
  return m;
}

// exp(theta A) for anti-Hermitian A.
Mat expm_antihermitian(const Mat& a, double theta) {
  const Mat h = oracle::cd(0, 1) * a;
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXcd ph = (-oracle::cd(0, 1) * theta * es.eigenvalues().cast<oracle::cd>()).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

std::map<std::string, double> as_map(const remsim::Excitation& e) {
  std::map<std::string, double> m;
  for (const auto& t : e.terms) m[t.pauli.label()] = t.coeff;
  return m;
}

struct System {
  int norb, na, nb;
  std::size_t n_exc;
  std::string hf;
};

class Uccsd : public ::testing::TestWithParam<System> {};

TEST_P(Uccsd, GeneratorsMatchJordanWignerOracle) {
  const auto s = GetParam();
  const auto exc = remsim::uccsd_excitations(s.norb, s.na, s.nb);
  const auto want = oracle_generators(s.norb, s.na, s.nb);
  ASSERT_EQ(exc.size(), s.n_exc);
  ASSERT_EQ(want.size(), exc.size());
  const int n = 2 * s.norb - 2;
  for (std::size_t k = 0; k < exc.size(); ++k) {
    EXPECT_EQ(exc[k].param, static_cast<int>(k));
    EXPECT_LT((generator_matrix(exc[k], n) - want[k]).norm(), 1e-12) << "excitation " << k;
  }
}

TEST_P(Uccsd, HartreeFockLabelMatchesParityOfOccupations) {
  const auto s = GetParam();
  EXPECT_EQ(remsim::parity_hf_bitstring(s.norb, s.na, s.nb), s.hf);
}

TEST_P(Uccsd, SingleParameterCircuitIsExactExponential) {
  const auto s = GetParam();
  const auto spec = remsim::uccsd_spec(s.norb, s.na, s.nb);
  const auto circuit = remsim::build_ansatz(spec);
  const auto want = oracle_generators(s.norb, s.na, s.nb);
  const int n = spec.n_qubits;
  Vec hf = Vec::Zero(1 << n);
  hf(static_cast<Eigen::Index>(std::stoul(s.hf, nullptr, 2))) = 1.0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    std::vector<double> theta(static_cast<std::size_t>(spec.n_params), 0.0);
    theta[k] = 0.37;
    const Vec got = amplitudes(remsim::run_statevector(circuit, theta));
    const Vec ref = expm_antihermitian(want[k], 0.37) * hf;
    EXPECT_LT((got - ref).norm(), 1e-12) << "excitation " << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Molecules, Uccsd,
                         ::testing::Values(System{2, 1, 1, 3, "01"}, System{3, 1, 1, 8, "0011"},
                                           System{4, 2, 2, 26, "001001"}, System{3, 2, 1, 8, "1101"}));

TEST(Uccsd, TwoOrbitalGeneratorsInClosedForm) {
  const auto exc = remsim::uccsd_excitations(2, 1, 1);
  ASSERT_EQ(exc.size(), 3u);
  using M = std::map<std::string, double>;
  EXPECT_EQ(as_map(exc[0]), (M{{"IY", 1.0}}));
  EXPECT_EQ(as_map(exc[1]), (M{{"YI", -1.0}}));
  EXPECT_EQ(as_map(exc[2]), (M{{"XY", 0.5}, {"YX", -0.5}}));
}

TEST(Ansatz, ZeroParametersPrepareHartreeFock) {
  const std::vector<remsim::AnsatzSpec> specs = {
      remsim::compact_spec(), remsim::uccsd_spec(2, 1, 1), remsim::uccsd_spec(3, 1, 1),
      remsim::hardware_efficient_spec(4, 2, remsim::t_shaped_map(), remsim::RotationPattern::RY, "0011"),
      remsim::hardware_efficient_spec(3, 1, {{0, 1}, {1, 2}}, remsim::RotationPattern::RYRZ, "101")};
  for (const auto& spec : specs) {
    const auto c = remsim::build_ansatz(spec);
    ASSERT_EQ(c.n_params(), spec.n_params);
    const std::vector<double> zero(static_cast<std::size_t>(spec.n_params), 0.0);
    const auto p = remsim::run_statevector(c, zero).probabilities();
    EXPECT_NEAR(p[std::stoul(spec.hf_bitstring, nullptr, 2)], 1.0, 1e-12) << to_string(spec.family);
  }
}

TEST(Ansatz, CompactCircuitStateFormula) {
  const auto c = remsim::h2_compact_circuit();
  for (double t : {-2.5, -0.1, 0.0, 0.7, 3.1}) {
    const std::vector<double> theta = {t};
    const Vec v = amplitudes(remsim::run_statevector(c, theta));
    Vec want = Vec::Zero(4);
    want(1) = std::cos(t / 2);
    want(2) = -std::sin(t / 2);
    EXPECT_LT((v - want).norm(), 1e-14);
  }
}

TEST(Ansatz, CompactEnergyIsFirstHarmonicInTheta) {
  std::mt19937_64 rng(4);
  const Mat herm = oracle::random_unitary(4, rng);
  const Mat h = herm + herm.adjoint();
  const auto c = remsim::h2_compact_circuit();
  auto energy = [&](double t) {
    const std::vector<double> theta = {t};
    const Vec v = amplitudes(remsim::run_statevector(c, theta));
    return (v.adjoint() * h * v)(0, 0).real();
  };
  // Solve for C + a cos t + b sin t from three angles and check elsewhere.
  Eigen::Matrix3d m;
  Eigen::Vector3d y;
  const double ts[] = {0.0, 2.0, -1.5};
  for (int i = 0; i < 3; ++i) {
    m.row(i) << 1.0, std::cos(ts[i]), std::sin(ts[i]);
    y(i) = energy(ts[i]);
  }
  const Eigen::Vector3d k = m.fullPivLu().solve(y);
  for (double t = -3.0; t <= 3.0; t += 0.25)
    EXPECT_NEAR(energy(t), k(0) + k(1) * std::cos(t) + k(2) * std::sin(t), 1e-12);
}

TEST(Ansatz, PauliExponentialMatchesClosedForm) {
  std::mt19937_64 rng(5);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 30; ++trial) {
    std::string label(3, 'I');
    while (label == "III")
      for (char& ch : label) ch = letters[rng() % 4];
    const auto p = remsim::PauliString::parse(label, 3);
    const double a = 0.2 * trial - 2.9;
    for (std::size_t b = 0; b < 8; ++b) {
      remsim::Circuit c(3);
      for (int q = 0; q < 3; ++q)
        if (b >> q & 1U) c.x(q);
      remsim::append_pauli_exponential(c, p, remsim::Angle::fixed(a));
      const Vec got = amplitudes(remsim::run_statevector(c, std::vector<double>{}));
      const Mat u = std::cos(a / 2) * Mat::Identity(8, 8) -
                    oracle::cd(0, 1) * std::sin(a / 2) * oracle::label_matrix(label);
      EXPECT_LT((got - u.col(static_cast<Eigen::Index>(b))).norm(), 1e-13) << label;
    }
  }
  remsim::Circuit c(2);
  EXPECT_THROW(remsim::append_pauli_exponential(c, remsim::PauliString::identity(2), remsim::Angle::fixed(1)),
               std::invalid_argument);
}

TEST(Ansatz, CircuitsAreUnitary) {
  std::mt19937_64 rng(6);
  const auto spec = remsim::hardware_efficient_spec(3, 2, {{0, 1}, {1, 2}}, remsim::RotationPattern::RYRZ, "001");
  const auto ansatz = remsim::build_ansatz(spec);
  std::uniform_real_distribution<double> u(-3, 3);
  std::vector<double> theta(static_cast<std::size_t>(spec.n_params));
  for (double& t : theta) t = u(rng);
  Mat cols(8, 8);
  for (std::size_t b = 0; b < 8; ++b) {
    remsim::Circuit c(3);
    for (int q = 0; q < 3; ++q)
      if (b >> q & 1U) c.x(q);
    c.append(ansatz);
    cols.col(static_cast<Eigen::Index>(b)) = amplitudes(remsim::run_statevector(c, theta));
  }
  EXPECT_LT((cols.adjoint() * cols - Mat::Identity(8, 8)).norm(), 1e-12);
}

TEST(Ansatz, CircuitStatistics) {
  using S = remsim::CircuitStats;
  EXPECT_EQ(remsim::circuit_stats(remsim::build_ansatz(remsim::compact_spec())).two_qubit_gates, 1);
  EXPECT_EQ(remsim::circuit_stats(remsim::build_ansatz(remsim::uccsd_spec(2, 1, 1))), (S{14, 4, 3}));
  EXPECT_EQ(remsim::circuit_stats(remsim::build_ansatz(remsim::uccsd_spec(3, 1, 1))), (S{275, 172, 8}));
  const auto hwe = remsim::hardware_efficient_spec(4, 2, remsim::t_shaped_map(), remsim::RotationPattern::RY, "0011");
  EXPECT_EQ(remsim::circuit_stats(remsim::hardware_efficient_circuit(4, 2, remsim::t_shaped_map())), (S{9, 6, 12}));
  EXPECT_EQ(remsim::circuit_stats(remsim::build_ansatz(hwe)), (S{10, 6, 12}));
}

TEST(Ansatz, ParameterCountsAndValidation) {
  EXPECT_EQ(remsim::hardware_efficient_param_count(4, 2, remsim::RotationPattern::RY), 12);
  EXPECT_EQ(remsim::hardware_efficient_param_count(4, 2, remsim::RotationPattern::RYRZ), 24);
  EXPECT_THROW(remsim::hardware_efficient_spec(4, 2, {{0, 4}}, remsim::RotationPattern::RY, "0011"),
               std::invalid_argument);
  EXPECT_THROW(remsim::hardware_efficient_spec(4, 2, {{0, 0}}, remsim::RotationPattern::RY, "0011"),
               std::invalid_argument);
  EXPECT_THROW(remsim::hardware_efficient_spec(4, 2, remsim::t_shaped_map(), remsim::RotationPattern::RY, "011"),
               std::invalid_argument);
  EXPECT_THROW(remsim::uccsd_excitations(2, 3, 1), std::invalid_argument);
  EXPECT_EQ(remsim::parse_ansatz_family("hwe"), AnsatzFamily::HardwareEfficient);
  EXPECT_EQ(remsim::parse_ansatz_family("uccsd"), AnsatzFamily::Uccsd);
  EXPECT_EQ(remsim::parse_ansatz_family("compact"), AnsatzFamily::CompactUccd);
  EXPECT_THROW(remsim::parse_ansatz_family("ucc"), std::invalid_argument);
}

}  // namespace
