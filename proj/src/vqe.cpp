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

#include "remsim/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "remsim/mitigation.hpp"

namespace remsim {

EnergyEvaluator::EnergyEvaluator(PauliHamiltonian h, Circuit circuit, EvaluatorOptions options)
    : h_(std::move(h)), circuit_(std::move(circuit)), options_(std::move(options)) {
  if (h_.n_qubits() != circuit_.n_qubits())
    throw std::invalid_argument(fmt::format("hamiltonian has {} qubits, circuit has {}", h_.n_qubits(),
                                            circuit_.n_qubits()));
  options_.noise.validate();
  const auto& conf = options_.noise.confusion;
  if (conf && conf->n_qubits() != h_.n_qubits()) throw std::invalid_argument("readout confusion has the wrong width");
  if (options_.mitigation && options_.mitigation->n_qubits() != h_.n_qubits())
    throw std::invalid_argument("mitigation confusion has the wrong width");
  for (auto& g : group_terms(h_)) {
    bool measured = false;
    for (std::size_t idx : g.members) measured |= !h_.terms()[idx].pauli.is_identity();
    if (measured) groups_.push_back(std::move(g));
  }
  if (options_.backend == BackendKind::Noisy && options_.shots > 0 && options_.shots < groups_.size())
    throw std::invalid_argument(fmt::format("{} shots cannot cover {} measurement groups", options_.shots,
                                            groups_.size()));
}

double EnergyEvaluator::exact(std::span<const double> theta) const {
  return expectation(h_, run_statevector(circuit_, theta));
}

double EnergyEvaluator::evaluate(std::span<const double> theta, std::uint64_t eval_index) const {
  circuit_.check_bindings(theta);
  double e = 0.0;
  if (options_.backend == BackendKind::Ideal) {
    e = exact(theta);
  } else {
    const QuantumState rho = run_density(circuit_, theta, options_.noise);
    const std::uint64_t eval_seed = derive_seed(options_.seed, eval_index);
    const auto& conf = options_.noise.confusion;
    const std::uint64_t n_groups = groups_.size();
    e = h_.constant_part();
    for (std::uint64_t g = 0; g < n_groups; ++g) {
      const auto& group = groups_[g];
      std::vector<double> p = measurement_distribution(rho, group.basis);
      if (options_.shots == 0) {
        if (conf) p = conf->apply(p);
      } else {
        const std::uint64_t shots = options_.shots / n_groups + (g < options_.shots % n_groups ? 1 : 0);
        Counts counts = sample_distribution(p, h_.n_qubits(), shots, derive_seed(eval_seed, 2 * g));
        if (conf) counts = apply_readout_noise(counts, *conf, derive_seed(eval_seed, 2 * g + 1));
        p = counts.frequencies();
      }
      if (options_.mitigation) {
        double s = 0.0;
        for (double& v : p) s += (v = std::max(v, 0.0));
        for (double& v : p) v /= s;
        p = unfold(*options_.mitigation, p).x;
      }
      e += expectation_from_distribution(p, group, h_);
    }
  }
  if (options_.rem_delta) e = rem_apply(e, *options_.rem_delta);
  return e;
}

EnergyEvaluator EnergyEvaluator::with_rem(double delta) const {
  EnergyEvaluator copy = *this;
  copy.options_.rem_delta = delta;
  return copy;
}

EnergyEvaluator EnergyEvaluator::without_rem() const {
  EnergyEvaluator copy = *this;
  copy.options_.rem_delta.reset();
  return copy;
}

VqeOutcome minimize(const EnergyEvaluator& ev, std::span<const double> theta0, const OptimizerConfig& cfg) {
  std::vector<double> start(theta0.begin(), theta0.end());
  if (start.empty()) start.assign(static_cast<std::size_t>(ev.n_params()), 0.0);
  if (static_cast<int>(start.size()) != ev.n_params())
    throw std::invalid_argument(fmt::format("start vector has {} entries, ansatz has {} parameters", start.size(),
                                            ev.n_params()));
  std::uint64_t index = 0;
  const Objective f = [&](std::span<const double> x) { return ev.evaluate(x, index++); };
  OptimizeResult r = remsim::minimize(f, start, cfg);
  return {std::move(r.x), r.fun, r.n_evals, r.converged, std::move(r.trace)};
}

double CosineFit::operator()(double theta) const { return c + a * std::cos(theta - alpha); }

CosineFit fit_cosine(std::span<const double> theta, std::span<const double> energy) {
  if (theta.size() != energy.size()) throw std::invalid_argument("theta and energy lengths differ");
  std::vector<double> distinct(theta.begin(), theta.end());
  for (double& t : distinct) t = std::remainder(t, 2.0 * std::numbers::pi);
  std::sort(distinct.begin(), distinct.end());
  const auto unique_count =
      std::unique(distinct.begin(), distinct.end(), [](double x, double y) { return std::abs(x - y) < 1e-12; }) -
      distinct.begin();
  if (unique_count < 3) throw std::invalid_argument("cosine fit needs at least three distinct angles");

  const auto n = static_cast<Eigen::Index>(theta.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::cos(theta[static_cast<std::size_t>(i)]);
    design(i, 2) = std::sin(theta[static_cast<std::size_t>(i)]);
    y(i) = energy[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(y);
  CosineFit fit;
  fit.c = coef(0);
  fit.a = std::hypot(coef(1), coef(2));
  fit.alpha = std::atan2(coef(2), coef(1));
  double tm = fit.alpha + std::numbers::pi;
  if (tm > std::numbers::pi) tm -= 2.0 * std::numbers::pi;
  fit.theta_min = tm;
  fit.e_min = fit.c - fit.a;
  fit.rms_residual = std::sqrt((design * coef - y).squaredNorm() / static_cast<double>(n));
  return fit;
}

SweepResult sweep_and_fit(const EnergyEvaluator& ev, std::span<const double> grid, std::uint64_t first_index) {
  if (ev.n_params() != 1) throw std::invalid_argument("sweep needs a one-parameter ansatz");
  if (grid.size() < 4) throw std::invalid_argument("sweep grid needs at least four points");
  SweepResult r;
  r.grid.assign(grid.begin(), grid.end());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    r.energies.push_back(ev.evaluate(std::span<const double>(&t, 1), first_index + k));
  }
  r.fit = fit_cosine(r.grid, r.energies);
  return r;
}

std::vector<double> uniform_grid(int n) {
  if (n < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = -std::numbers::pi + 2.0 * std::numbers::pi * k / (n - 1);
  return g;
}

}  // namespace remsim
