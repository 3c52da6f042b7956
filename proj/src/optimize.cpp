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

#include "remsim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace remsim {
namespace {

using Point = std::vector<double>;

// Counts evaluations and records the trace; refuses to exceed the budget.
class Recorder {
 public:
  Recorder(const Objective& f, int budget) : f_(f), budget_(budget) {}

  double best() const { return result_.fun; }
  Point best_x() const { return result_.x; }
  bool exhausted() const { return static_cast<int>(result_.trace.size()) >= budget_; }

  double operator()(const std::vector<double>& x) {
    const double v = f_(x);
    result_.trace.push_back({x, v});
    if (result_.trace.size() == 1 || v < result_.fun) {
      result_.fun = v;
      result_.x = x;
    }
    return v;
  }

  OptimizeResult finish(bool converged) {
    result_.n_evals = static_cast<int>(result_.trace.size());
    result_.converged = converged;
    return std::move(result_);
  }

 private:
  const Objective& f_;
  int budget_;
  OptimizeResult result_;
};

Point affine(const Point& a, const Point& b, double t) {
  // a + t (b - a)
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return r;
}

// One Nelder-Mead run from x0; returns true when the tolerances were met.
bool nelder_mead_run(Recorder& rec, const Point& x0, const OptimizerConfig& cfg) {
  const std::size_t n = x0.size();
  std::vector<Point> simplex{x0};
  std::vector<double> fv;
  if (rec.exhausted()) return false;
  fv.push_back(rec(x0));
  for (std::size_t i = 0; i < n && !rec.exhausted(); ++i) {
    Point p = x0;
    p[i] += cfg.initial_step;
    simplex.push_back(p);
    fv.push_back(rec(p));
  }
  if (simplex.size() != n + 1) return false;

  std::vector<std::size_t> order(n + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<Point> s2;
    std::vector<double> f2;
    for (std::size_t k : order) {
      s2.push_back(simplex[k]);
      f2.push_back(fv[k]);
    }
    simplex.swap(s2);
    fv.swap(f2);

    double xspread = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i = 0; i < n; ++i) xspread = std::max(xspread, std::abs(simplex[k][i] - simplex[0][i]));
    if (fv[n] - fv[0] <= cfg.ftol && xspread <= cfg.xtol) return true;
    if (rec.exhausted()) return false;

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);

    const Point xr = affine(centroid, simplex[n], -1.0);
    const double fr = rec(xr);
    if (fr < fv[0]) {
      if (rec.exhausted()) {
        simplex[n] = xr;
        fv[n] = fr;
        continue;
      }
      const Point xe = affine(centroid, simplex[n], -2.0);
      const double fe = rec(xe);
      if (fe < fr) {
        simplex[n] = xe;
        fv[n] = fe;
      } else {
        simplex[n] = xr;
        fv[n] = fr;
      }
      continue;
    }
    if (fr < fv[n - 1]) {
      simplex[n] = xr;
      fv[n] = fr;
      continue;
    }
    if (rec.exhausted()) return false;
    const bool outside = fr < fv[n];
    const Point xc = outside ? affine(centroid, xr, 0.5) : affine(centroid, simplex[n], 0.5);
    const double fc = rec(xc);
    if (fc < (outside ? fr : fv[n])) {
      simplex[n] = xc;
      fv[n] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (rec.exhausted()) return false;
      simplex[k] = affine(simplex[0], simplex[k], 0.5);
      fv[k] = rec(simplex[k]);
    }
  }
}

}  // namespace

std::string_view to_string(OptimizerMethod m) {
  return m == OptimizerMethod::NelderMead ? "nelder-mead" : "spsa";
}

void OptimizerConfig::validate() const {
  if (max_evals < 1) throw std::invalid_argument("max_evals must be positive");
  if (!(ftol >= 0.0) || !(xtol >= 0.0)) throw std::invalid_argument("tolerances must be non-negative");
  if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
  if (restarts < 0) throw std::invalid_argument("restarts must be non-negative");
  if (!(spsa_a > 0.0) || !(spsa_c > 0.0) || spsa_stability < 0.0)
    throw std::invalid_argument("SPSA gains must be positive");
}

OptimizeResult minimize_nelder_mead(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg) {
  cfg.validate();
  if (x0.empty()) throw std::invalid_argument("nothing to optimize: empty parameter vector");
  Recorder rec(f, cfg.max_evals);
  bool converged = nelder_mead_run(rec, Point(x0.begin(), x0.end()), cfg);
  // Restart from the best point to escape a collapsed simplex.
  for (int r = 0; r < cfg.restarts && converged && !rec.exhausted(); ++r) {
    const double before = rec.best();
    converged = nelder_mead_run(rec, rec.best_x(), cfg);
    if (rec.best() >= before - cfg.ftol) break;
  }
  return rec.finish(converged);
}

OptimizeResult minimize_spsa(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg) {
  cfg.validate();
  if (x0.empty()) throw std::invalid_argument("nothing to optimize: empty parameter vector");
  Recorder rec(f, cfg.max_evals);
  std::mt19937_64 rng(cfg.seed);
  Point x(x0.begin(), x0.end());
  const std::size_t n = x.size();
  rec(x);
  const int iterations = (cfg.max_evals - 2) / 2;
  Point plus(n), minus(n), delta(n);
  for (int k = 0; k < iterations; ++k) {
    const double ak = cfg.spsa_a / std::pow(k + 1 + cfg.spsa_stability, 0.602);
    const double ck = cfg.spsa_c / std::pow(k + 1, 0.101);
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = (rng() >> 63) ? 1.0 : -1.0;
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
    const double fp = rec(plus);
    const double fm = rec(minus);
    const double g = (fp - fm) / (2.0 * ck);
    for (std::size_t i = 0; i < n; ++i) x[i] -= ak * g * delta[i];
  }
  if (!rec.exhausted()) rec(x);
  return rec.finish(true);
}

OptimizeResult minimize(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg) {
  return cfg.method == OptimizerMethod::NelderMead ? minimize_nelder_mead(f, x0, cfg) : minimize_spsa(f, x0, cfg);
}

}  // namespace remsim
