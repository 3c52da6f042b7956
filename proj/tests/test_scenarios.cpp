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

// Worked scenarios on the embedded molecules, one module at a time.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "remsim/ansatz.hpp"
#include "remsim/chemdata.hpp"
#include "remsim/experiments.hpp"
#include "remsim/mitigation.hpp"
#include "remsim/sim.hpp"
#include "remsim/vqe.hpp"

namespace {

using namespace remsim;

const PauliHamiltonian& h2_eq() {
  static const auto ds = builtin("h2");
  return ds.at(0.7414).hamiltonian;
}

std::vector<double> exact_distribution(const Counts& c) {
  const auto f = c.frequencies();
  return {f.begin(), f.end()};
}

TEST(Scenario, SimpleOperatorsToDense) {
  const std::vector<std::pair<std::string, double>> z = {{"Z", 1.0}};
  const auto mz = to_dense_matrix(PauliHamiltonian::from_labels(1, z));
  EXPECT_EQ(mz(0, 0), 1.0);
  EXPECT_EQ(mz(1, 1), -1.0);
  const std::vector<std::pair<std::string, double>> xx = {{"XX", 1.0}};
  const auto mxx = to_dense_matrix(PauliHamiltonian::from_labels(2, xx));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(mxx(r, c).real(), r + c == 3 ? 1.0 : 0.0);
}

TEST(Scenario, IdentityOnlyHamiltonianIsConstant) {
  const std::vector<std::pair<std::string, double>> ii = {{"II", -0.4}};
  const auto h = PauliHamiltonian::from_labels(2, ii, 0.7);
  const auto s = run_statevector(hardware_efficient_circuit(2, 1, {{0, 1}}), std::vector<double>{0.3, 1.1, -2, 0.5});
  EXPECT_NEAR(expectation(h, s), 0.3, 1e-15);
}

TEST(Scenario, H2GroundEnergyAtEquilibrium) {
  EXPECT_NEAR(ground_state_energy(h2_eq()).energy, -1.1373, 5e-4);
}

TEST(Scenario, HeHGroupsIntoFourBases) {
  const auto ds = builtin("heh+");
  const auto groups = group_terms(ds.at(0.7899).hamiltonian);
  std::vector<std::string> bases;
  for (const auto& g : groups) bases.push_back(g.basis.label());
  std::sort(bases.begin(), bases.end());
  EXPECT_EQ(bases, (std::vector<std::string>{"XX", "XZ", "ZX", "ZZ"}));
}

TEST(Scenario, BasisStateConventions) {
  EXPECT_EQ(run_statevector(Circuit(2), std::vector<double>{}).probabilities()[0], 1.0);
  Circuit c(2);
  c.x(0);
  const auto s = run_statevector(c, std::vector<double>{});
  EXPECT_EQ(s.probabilities()[1], 1.0);
  EXPECT_EQ(sample_counts(s, PauliString::parse("ZZ", 2), 10, 1).to_map().begin()->first, "01");
}

TEST(Scenario, CompactAnsatzReachesGroundAtItsOptimum) {
  const EnergyEvaluator ev(h2_eq(), h2_compact_circuit());
  const auto sweep = sweep_and_fit(ev, uniform_grid(13));
  const std::vector<double> star = {sweep.fit.theta_min};
  EXPECT_NEAR(ev.exact(star), ground_state_energy(h2_eq()).energy, 1e-10);
  // The same minimum from the {|01>, |10>} block alone.
  const auto m = to_dense_matrix(h2_eq());
  Eigen::Matrix2d block;
  block << m(1, 1).real(), m(1, 2).real(), m(2, 1).real(), m(2, 2).real();
  EXPECT_NEAR(sweep.fit.e_min, Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(block).eigenvalues()(0), 1e-6);
  EXPECT_NEAR(sweep.fit.e_min, -1.1373, 5e-4);
}

TEST(Scenario, CompactAnsatzAtDeviceNoiseLosesTensOfMillihartree) {
  const EnergyEvaluator ideal(h2_eq(), h2_compact_circuit());
  const double t = sweep_and_fit(ideal, uniform_grid()).fit.theta_min;
  EvaluatorOptions o;
  o.backend = BackendKind::Noisy;
  o.noise = NoiseModel::depolarizing(0.018, 0.0018);
  const EnergyEvaluator noisy(h2_eq(), h2_compact_circuit(), o);
  const std::vector<double> th = {t};
  const double err = noisy.evaluate(th) - ideal.exact(th);
  EXPECT_GT(err, 5e-3);
  EXPECT_LT(err, 1e-1);
}

TEST(Scenario, MaximalSingleQubitDepolarizing) {
  // p1 is the total Pauli error probability: p1 = 3/4 is the fully mixing point,
  // p1 = 1 inverts and shrinks the Bloch vector by 1/3.
  for (const auto& [p, scale] : {std::pair{0.75, 0.0}, std::pair{1.0, -1.0 / 3.0}}) {
    Circuit c(1);
    c.ry(0, Angle::fixed(0.9));
    const auto pure = run_statevector(c, std::vector<double>{});
    auto rho = pure.to_density();
    apply_depolarizing_1q(rho, 0, p);
    const double z0 = pure.probabilities()[0] - pure.probabilities()[1];
    const double x0 = 2 * pure.rho(0, 1).real();
    EXPECT_NEAR(rho.rho(0, 0).real() - rho.rho(1, 1).real(), scale * z0, 1e-14);
    EXPECT_NEAR(2 * rho.rho(0, 1).real(), scale * x0, 1e-14);
  }
}

TEST(Scenario, DeterministicOutcomes) {
  EXPECT_EQ(sample_counts(QuantumState::basis(2, 0), PauliString::parse("ZZ", 2), 100, 3).to_map(),
            (std::map<std::string, std::uint64_t>{{"00", 100}}));
  Circuit plus(1);
  plus.h(0);
  const auto s = run_statevector(plus, std::vector<double>{});
  EXPECT_EQ(sample_counts(s, PauliString::parse("X", 1), 777, 5)[0], 777u);
}

TEST(Scenario, HartreeFockXXIsZeroWithinThreeSigma) {
  const auto hf = QuantumState::basis(2, 1);
  const auto counts = sample_counts(hf, PauliString::parse("XX", 2), 5000, 42);
  const std::vector<std::pair<std::string, double>> xx = {{"XX", 1.0}};
  const auto h = PauliHamiltonian::from_labels(2, xx);
  const MeasurementGroup g{PauliString::parse("XX", 2), {0}};
  EXPECT_LT(std::abs(expectation_from_counts(counts, g, h)), 3.0 / std::sqrt(5000.0));
}

TEST(Scenario, ReadoutNoiseFixtures) {
  const auto dev = device_confusion();
  const auto clean = Counts::from_map(2, {{"00", 200000}});
  const auto noisy = apply_readout_noise(clean, dev, 8);
  const double p = dev(0, 0);
  EXPECT_NEAR(p, 0.968, 1e-3);
  EXPECT_NEAR(noisy.frequencies()[0], p, 5 * std::sqrt(p * (1 - p) / 2e5));
  const auto flat = apply_readout_noise(clean, ConfusionMatrix::uniform(2), 9);
  for (double f : flat.frequencies()) EXPECT_NEAR(f, 0.25, 5 * std::sqrt(0.25 * 0.75 / 2e5));
}

TEST(Scenario, ParityEstimatesFromCounts) {
  const std::vector<std::pair<std::string, double>> zz = {{"ZZ", 1.0}};
  const auto h = PauliHamiltonian::from_labels(2, zz);
  const MeasurementGroup g{PauliString::parse("ZZ", 2), {0}};
  EXPECT_EQ(expectation_from_counts(Counts::from_map(2, {{"00", 100}}), g, h), 1.0);
  EXPECT_EQ(expectation_from_counts(Counts::from_map(2, {{"01", 50}, {"10", 50}}), g, h), -1.0);
}

TEST(Scenario, H2ZGroupOnHartreeFock) {
  const auto& h = h2_eq();
  const auto groups = group_terms(h);
  const auto& zg = groups.front();
  ASSERT_EQ(zg.basis.label(), "ZZ");
  const auto p = measurement_distribution(QuantumState::basis(2, 1), zg.basis);
  EXPECT_NEAR(expectation_from_distribution(p, zg, h), -0.777, 1e-12);
}

TEST(Scenario, CountsConvergeAtMillionShots) {
  EvaluatorOptions o;
  o.backend = BackendKind::Noisy;
  o.shots = 1000000;
  o.seed = 13;
  const EnergyEvaluator ev(h2_eq(), h2_compact_circuit(), o);
  const std::vector<double> th = {0.4};
  // Per-term variance bound: sum_i |c_i| over two groups of 5e5 shots each.
  double bound = 0.0;
  for (const auto& t : h2_eq().terms())
    if (!t.pauli.is_identity()) bound += std::abs(t.coeff);
  EXPECT_NEAR(ev.evaluate(th), ev.exact(th), 5 * bound / std::sqrt(5e5));
}

TEST(Scenario, HartreeFockLabels) {
  EXPECT_EQ(builtin("h2").hf_bitstring(), "01");
  EXPECT_EQ(builtin("heh+").hf_bitstring(), "01");
  const auto lih = builtin("lih");
  const auto m = to_dense_matrix(lih.at(lih.equilibrium_r).hamiltonian);
  // Among the four basis states with the HF label's particle sector the HF state is lowest on the diagonal.
  const auto hf = static_cast<Eigen::Index>(std::stoul(lih.hf_bitstring(), nullptr, 2));
  for (Eigen::Index i = 0; i < 16; ++i) EXPECT_GE(m(i, i).real(), m(hf, hf).real() - 1e-12) << i;
}

TEST(Scenario, HardwareEfficientWithoutPreparationStartsAtZero) {
  const auto c = hardware_efficient_circuit(4, 2, t_shaped_map());
  EXPECT_EQ(run_statevector(c, std::vector<double>(12, 0.0)).probabilities()[0], 1.0);
  EXPECT_EQ(circuit_stats(Circuit(3)), (CircuitStats{0, 0, 0}));
}

TEST(Scenario, LiHDeviceParametersSnapshot) {
  const auto lih = builtin("lih");
  const auto& g = lih.at(lih.equilibrium_r);
  const EnergyEvaluator ev(g.hamiltonian, build_ansatz(lih.ansatz(AnsatzFamily::HardwareEfficient)));
  const double e = ev.exact(g.device_angles);
  EXPECT_NEAR(e, -6.141854096787928, 1e-9);
  EXPECT_GT(e, ground_state_energy(g.hamiltonian).energy);
}

TEST(Scenario, CalibrationAgainstDeviceFixture) {
  const auto dev = device_confusion();
  const auto est = calibrate_confusion(simulated_readout(dev), 2, 1000, 100, 21);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      // Quoted spreads of exactly-zero entries are floored at one count per 1000 shots.
      const double quoted = std::max(dev.uncertainty(j, i), 1e-3);
      EXPECT_NEAR(est(j, i), dev(j, i), 3 * quoted) << j << "," << i;
    }
  const auto big = calibrate_confusion(simulated_readout(dev), 2, 1000000, 1, 22);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(big(j, i), dev(j, i), 1e-3);
}

TEST(Scenario, UnfoldingACalibrationColumn) {
  const auto dev = device_confusion();
  const std::vector<double> col = {dev(0, 0), dev(1, 0), dev(2, 0), dev(3, 0)};
  const auto r = unfold(dev, col);
  EXPECT_NEAR(r.x[0], 1.0, 0.01);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(r.x[i], 0.0, 0.01);
}

TEST(Scenario, PublishedRemArithmetic) {
  EXPECT_NEAR(rem_delta(-1.0897, -1.1167), 0.0270, 1e-12);
  EXPECT_EQ(rem_delta(-2.5, -2.5), 0.0);
  EXPECT_NEAR(rem_delta(-7.6071, -7.8620), 0.2549, 1e-12);
  EXPECT_NEAR(rem_apply(-1.1085, 0.0270), -1.1355, 1e-12);
  EXPECT_NEAR(rem_apply(-7.6102, 0.2549), -7.8651, 1e-12);
  const auto h2 = error_metrics(-1.1085, rem_apply(-1.1085, 0.0270), -1.1373);
  EXPECT_NEAR(h2.err_vqe, 0.0288, 1e-12);
  EXPECT_NEAR(h2.err_rem, 0.0018, 1e-12);
  const auto heh = make_rem_report(-2.8447, -2.8150, -2.8542, -2.8247);
  EXPECT_NEAR(heh.errors.err_vqe, 0.0295, 1.5e-4);
  EXPECT_NEAR(heh.errors.err_rem, -0.0002, 1.5e-4);
  EXPECT_EQ(error_metrics(-1.0, rem_apply(-1.0, 0.1), -1.1).err_rem, 0.0);
}

TEST(Scenario, NoisySweepWithRemNearExact) {
  EvaluatorOptions o;
  o.backend = BackendKind::Noisy;
  o.noise = NoiseModel::depolarizing(0.018);
  const EnergyEvaluator ev(h2_eq(), h2_compact_circuit(), o);
  const std::vector<double> zero = {0.0};
  const auto fit = sweep_and_fit(ev.with_rem(rem_delta(ev.evaluate(zero), ev.exact(zero))), uniform_grid()).fit;
  EXPECT_LT(std::abs(fit.e_min - ground_state_energy(h2_eq()).energy), 2e-3);
}

TEST(Scenario, EmbeddedRows) {
  const auto h2 = builtin("h2");
  EXPECT_EQ(h2.at(0.45).hamiltonian.coefficient("II"), -0.908);
  EXPECT_EQ(h2.at(0.45).v_nn, 1.1759);
  const auto heh = builtin("heh+");
  EXPECT_EQ(heh.at(0.65).hamiltonian.coefficient("XX"), 0.157);
  EXPECT_EQ(heh.at(0.65).v_nn, 1.6282);
  const auto lih = builtin("lih");
  EXPECT_NEAR(lih.at(lih.equilibrium_r).hamiltonian.offset(), -6.8029528, 1e-7);
}

TEST(Scenario, HamiltonianFileForH2) {
  const auto h = parse_hamiltonian("qubits=2\noffset=0.7138\nII -1.054\nIZ 0.394\nZI -0.394\nZZ -0.011\nXX 0.181\n");
  EXPECT_NEAR(ground_state_energy(h).energy, -1.1373, 5e-4);
  const auto dup = parse_hamiltonian("ZZ 0.25\nZZ 0.5\n");
  EXPECT_EQ(dup.size(), 1u);
  EXPECT_EQ(dup.coefficient("ZZ"), 0.75);
}

TEST(Scenario, PublishedReferencePairs) {
  const auto a = reference_energy(builtin("h2"), 1.65);
  EXPECT_EQ(a.e_exact_ref, -0.8678);
  EXPECT_EQ(a.e_exact_min, -0.9771);
  const auto b = reference_energy(builtin("heh+"), 1.35);
  EXPECT_EQ(b.e_exact_ref, -2.8314);
  EXPECT_EQ(b.e_exact_min, -2.8339);
  const auto c = reference_energy(builtin("lih"), 1.5949);
  EXPECT_EQ(c.e_exact_ref, -7.8620);
  EXPECT_EQ(c.e_exact_min, -7.8787);
}

RunConfig noisy_h2() {
  RunConfig cfg;
  cfg.molecule = "h2";
  cfg.backend = BackendKind::Noisy;
  cfg.p2 = kDeviceCzError;
  cfg.confusion = "figure-s2";
  cfg.readout_mitigation = true;
  cfg.rem = true;
  return cfg;
}

TEST(Scenario, DissociationAtDeviceNoise) {
  RunConfig cfg = noisy_h2();
  cfg.shots = 5000;
  cfg.seed = 42;
  const auto problems = resolve_problems(cfg, true);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto p = run_point(problems[i], cfg, cfg.p2, cfg.effective_p1(), derive_seed(cfg.seed, i));
    EXPECT_LT(std::abs(p.err_readout_rem), std::abs(p.err_vqe)) << "r = " << p.r;
    if (p.r <= 1.0) EXPECT_LT(std::abs(p.err_readout_rem), 2e-3) << "r = " << p.r;
  }
}

TEST(Scenario, HeHAtDeviceNoise) {
  RunConfig cfg = noisy_h2();
  cfg.molecule = "heh+";
  cfg.r = 0.7899;
  cfg.shots = 0;
  const auto problem = resolve_problems(cfg, false).front();
  const auto p = run_point(problem, cfg, cfg.p2, cfg.effective_p1(), 0);
  EXPECT_NEAR(p.e_readout_rem, -2.8542, 2e-3);
}

TEST(Scenario, NoiselessNoisyBackendIsSamplingOnly) {
  RunConfig cfg = noisy_h2();
  cfg.p2 = 0.0;
  cfg.confusion = "ideal";
  cfg.shots = 200000;
  const auto p = run_point(resolve_problems(cfg, false).front(), cfg, 0.0, 0.0, 3);
  EXPECT_EQ(p.err_vqe, p.err_readout);
  EXPECT_EQ(p.err_rem, p.err_readout_rem);
  for (double e : {p.err_vqe, p.err_rem}) EXPECT_LT(std::abs(e), 5e-3);
}

TEST(Scenario, TenfoldImprovementAtDeviceNoise) {
  RunConfig cfg = noisy_h2();
  cfg.confusion = "ideal";
  cfg.shots = 0;
  const auto p = run_point(resolve_problems(cfg, false).front(), cfg, kDeviceCzError, 0.1 * kDeviceCzError, 0);
  EXPECT_GE(std::abs(p.err_vqe) / std::abs(p.err_rem), 10.0);
}

TEST(Scenario, LiHHardwareEfficientAtDeviceNoise) {
  RunConfig cfg;
  cfg.molecule = "lih";
  cfg.backend = BackendKind::Noisy;
  cfg.p2 = kDeviceCzError;
  cfg.shots = 0;
  cfg.rem = true;
  cfg.ansatz = AnsatzFamily::HardwareEfficient;
  const auto p = run_point(resolve_problems(cfg, false).front(), cfg, cfg.p2, cfg.effective_p1(), 0);
  EXPECT_LT(std::abs(p.err_rem), std::abs(p.err_vqe) / 10);
}

}  // namespace
