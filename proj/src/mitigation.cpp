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

#include "remsim/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"

namespace remsim {
namespace {

constexpr double kKktTol = 1e-10;
constexpr int kMaxIterations = 500;

// Euclidean projection onto the probability simplex.
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0;
  double tau = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumsum += u[k];
    const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) tau = t;
  }
  return (v.array() - tau).max(0.0).matrix();
}

// Multipliers for x >= 0 given the free set: gradient - nu, with nu the mean
// gradient over free coordinates.
double kkt_violation(const Eigen::VectorXd& grad, const Eigen::VectorXd& x, const std::vector<bool>& active) {
  double nu = 0.0;
  int n_free = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!active[static_cast<std::size_t>(i)]) {
      nu += grad(i);
      ++n_free;
    }
  nu = n_free ? nu / n_free : grad.minCoeff();
  double worst = std::abs(x.sum() - 1.0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double mu = grad(i) - nu;
    worst = std::max(worst, std::max(-x(i), 0.0));
    worst = std::max(worst, active[static_cast<std::size_t>(i)] ? std::max(-mu, 0.0) : std::abs(mu));
  }
  return worst;
}

}  // namespace

ConfusionMatrix calibrate_confusion(const ReadoutBackend& backend, int n_qubits, std::uint64_t shots,
                                    int repeats, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("calibration needs at least one repeat");
  if (shots == 0) throw std::invalid_argument("calibration needs a positive shot count");
  const std::size_t d = std::size_t{1} << n_qubits;
  std::vector<double> mean(d * d, 0.0);
  std::vector<double> var(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    const std::uint64_t column_seed = derive_seed(seed, i);
    std::vector<std::vector<double>> runs;
    for (int r = 0; r < repeats; ++r) {
      const Counts counts = backend(i, shots, derive_seed(column_seed, static_cast<std::uint64_t>(r)));
      if (counts.n_qubits() != n_qubits) throw std::invalid_argument("readout backend returned wrong width");
      runs.push_back(counts.frequencies());
    }
    for (std::size_t j = 0; j < d; ++j) {
      double m = 0.0;
      for (const auto& f : runs) m += f[j];
      m /= repeats;
      double v = 0.0;
      for (const auto& f : runs) v += (f[j] - m) * (f[j] - m);
      mean[j * d + i] = m;
      var[j * d + i] = repeats > 1 ? std::sqrt(v / (repeats - 1)) : 0.0;
    }
  }
  return ConfusionMatrix::column_normalized(n_qubits, std::move(mean), std::move(var));
}

ReadoutBackend simulated_readout(const ConfusionMatrix& truth) {
  return [truth](std::size_t prepared, std::uint64_t shots, std::uint64_t seed) {
    std::vector<double> column(truth.dim());
    for (std::size_t j = 0; j < column.size(); ++j) column[j] = truth(j, prepared);
    return sample_distribution(column, truth.n_qubits(), shots, seed);
  };
}

UnfoldResult unfold(const ConfusionMatrix& c, std::span<const double> measured) {
  const std::size_t d = c.dim();
  if (measured.size() != d)
    throw std::invalid_argument(fmt::format("measured distribution has {} entries, confusion matrix is {}x{}",
                                            measured.size(), d, d));
  double total = 0.0;
  for (double v : measured) {
    if (!(v >= 0.0)) throw std::invalid_argument("measured distribution has a negative entry");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("measured distribution must sum to 1");

  const Eigen::MatrixXd cm = c.matrix();
  const Eigen::Map<const Eigen::VectorXd> m(measured.data(), static_cast<Eigen::Index>(d));
  const Eigen::MatrixXd g = cm.transpose() * cm;
  const Eigen::VectorXd b = cm.transpose() * m;
  const auto n = static_cast<Eigen::Index>(d);

  Eigen::VectorXd x = project_to_simplex(cm.completeOrthogonalDecomposition().solve(m));
  std::vector<bool> active(d);
  for (std::size_t i = 0; i < d; ++i) active[i] = x(static_cast<Eigen::Index>(i)) <= 0.0;

  UnfoldResult out;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    out.iterations = iter + 1;
    const Eigen::VectorXd grad = g * x - b;
    std::vector<Eigen::Index> free;
    for (Eigen::Index i = 0; i < n; ++i)
      if (!active[static_cast<std::size_t>(i)]) free.push_back(i);
    const auto k = static_cast<Eigen::Index>(free.size());

    // Equality-constrained step on the free coordinates.
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs(k + 1);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index s = 0; s < k; ++s) kkt(r, s) = g(free[r], free[s]);
      kkt(r, k) = -1.0;
      kkt(k, r) = 1.0;
      rhs(r) = -grad(free[r]);
    }
    rhs(k) = 0.0;
    const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
    for (Eigen::Index r = 0; r < k; ++r) p(free[r]) = sol(r);

    if (p.lpNorm<Eigen::Infinity>() <= kKktTol) {
      const double nu = sol(k);
      Eigen::Index worst = -1;
      double most_negative = -kKktTol;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (!active[static_cast<std::size_t>(i)]) continue;
        const double mu = grad(i) - nu;
        if (mu < most_negative) {
          most_negative = mu;
          worst = i;
        }
      }
      if (worst < 0) break;
      active[static_cast<std::size_t>(worst)] = false;
      continue;
    }

    double alpha = 1.0;
    Eigen::Index blocking = -1;
    for (Eigen::Index i : free) {
      if (p(i) < 0.0) {
        const double a = -x(i) / p(i);
        if (a < alpha) {
          alpha = a;
          blocking = i;
        }
      }
    }
    x += alpha * p;
    if (blocking >= 0) {
      x(blocking) = 0.0;
      active[static_cast<std::size_t>(blocking)] = true;
    }
  }

  x = x.cwiseMax(0.0);
  x /= x.sum();
  for (Eigen::Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = x(i) == 0.0;
  out.kkt_residual = kkt_violation(g * x - b, x, active);
  out.residual = (m - cm * x).norm();
  out.x.assign(x.data(), x.data() + n);
  return out;
}

UnfoldResult unfold(const ConfusionMatrix& c, const Counts& counts) {
  const auto f = counts.frequencies();
  return unfold(c, f);
}

double rem_delta(double e_vqe_ref, double e_exact_ref) { return e_vqe_ref - e_exact_ref; }

double rem_apply(double e_vqe, double delta) { return e_vqe - delta; }

std::vector<double> rem_apply(std::span<const double> e_vqe, double delta) {
  std::vector<double> out(e_vqe.size());
  std::transform(e_vqe.begin(), e_vqe.end(), out.begin(), [delta](double e) { return e - delta; });
  return out;
}

ErrorMetrics error_metrics(double e_vqe_min, double e_rem, double e_exact_min) {
  ErrorMetrics m;
  m.err_vqe = e_vqe_min - e_exact_min;
  m.err_rem = e_rem - e_exact_min;
  m.improvement = m.err_rem == 0.0 ? std::numeric_limits<double>::infinity()
                                   : std::abs(m.err_vqe) / std::abs(m.err_rem);
  return m;
}

RemReport make_rem_report(double e_exact_ref, double e_vqe_ref, double e_exact_min, double e_vqe_min) {
  RemReport r;
  r.e_exact_ref = e_exact_ref;
  r.e_vqe_ref = e_vqe_ref;
  r.delta = rem_delta(e_vqe_ref, e_exact_ref);
  r.e_exact_min = e_exact_min;
  r.e_vqe_min = e_vqe_min;
  r.e_rem = rem_apply(e_vqe_min, r.delta);
  r.errors = error_metrics(e_vqe_min, r.e_rem, e_exact_min);
  return r;
}

std::string to_json(const RemReport& r) {
  nlohmann::ordered_json j;
  j["e_exact_ref"] = r.e_exact_ref;
  j["e_vqe_ref"] = r.e_vqe_ref;
  j["delta"] = r.delta;
  j["e_exact_min"] = r.e_exact_min;
  j["e_vqe_min"] = r.e_vqe_min;
  j["e_rem"] = r.e_rem;
  j["err_vqe"] = r.errors.err_vqe;
  j["err_rem"] = r.errors.err_rem;
  if (std::isfinite(r.errors.improvement)) j["improvement"] = r.errors.improvement;
  else j["improvement"] = nullptr;
  return j.dump(2);
}

}  // namespace remsim
