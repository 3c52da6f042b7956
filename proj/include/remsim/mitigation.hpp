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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "remsim/confusion.hpp"
#include "remsim/sim.hpp"

namespace remsim {

/// Runs `shots` readouts of basis state `prepared` and returns the tallies.
using ReadoutBackend = std::function<Counts(std::size_t prepared, std::uint64_t shots, std::uint64_t seed)>;

/// Estimates a confusion matrix by preparing every basis state `repeats`
/// times. Entries are the mean frequencies, uncertainties the sample std.
ConfusionMatrix calibrate_confusion(const ReadoutBackend& backend, int n_qubits, std::uint64_t shots,
                                    int repeats, std::uint64_t seed);

/// Readout backend that samples through a known confusion matrix.
ReadoutBackend simulated_readout(const ConfusionMatrix& truth);

struct UnfoldResult {
  std::vector<double> x;
  double residual = 0.0;      // ||m - C x||
  double kkt_residual = 0.0;  // largest KKT violation at x
  int iterations = 0;
};

/// Least-squares readout correction: argmin ||m - C x||^2 over the
/// probability simplex (x >= 0, sum x = 1).
UnfoldResult unfold(const ConfusionMatrix& c, std::span<const double> measured);
UnfoldResult unfold(const ConfusionMatrix& c, const Counts& counts);

/// delta = E_vqe(theta_ref) - E_exact(theta_ref).
double rem_delta(double e_vqe_ref, double e_exact_ref);
/// Shifts a noisy energy by delta.
double rem_apply(double e_vqe, double delta);
std::vector<double> rem_apply(std::span<const double> e_vqe, double delta);

struct ErrorMetrics {
  double err_vqe = 0.0;
  double err_rem = 0.0;
  /// err_vqe / err_rem in magnitude; infinite when err_rem is zero.
  double improvement = 0.0;
};

ErrorMetrics error_metrics(double e_vqe_min, double e_rem, double e_exact_min);

struct RemReport {
  double e_exact_ref = 0.0;
  double e_vqe_ref = 0.0;
  double delta = 0.0;
  double e_exact_min = 0.0;
  double e_vqe_min = 0.0;
  double e_rem = 0.0;
  ErrorMetrics errors;
};

RemReport make_rem_report(double e_exact_ref, double e_vqe_ref, double e_exact_min, double e_vqe_min);

std::string to_json(const RemReport& r);

}  // namespace remsim
