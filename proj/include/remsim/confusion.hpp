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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace remsim {

/// Column-stochastic readout matrix: entry(j, i) = P(measure j | prepared i).
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;

  /// Row-major entries; columns must sum to 1 within 1e-9 and entries lie in
  /// [0, 1]. uncertainty is empty or the same shape.
  ConfusionMatrix(int n_qubits, std::vector<double> entries, std::vector<double> uncertainty = {});

  /// Divides each column by its sum first (for tables printed in rounded percent).
  static ConfusionMatrix column_normalized(int n_qubits, std::vector<double> entries,
                                           std::vector<double> uncertainty = {});
  static ConfusionMatrix identity(int n_qubits);
  static ConfusionMatrix uniform(int n_qubits);

  /// Independent per-qubit flips: p01 = P(read 1 | 0), p10 = P(read 0 | 1).
  static ConfusionMatrix independent(std::span<const double> p01, std::span<const double> p10);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }

  double operator()(std::size_t measured, std::size_t prepared) const {
    return entries_[measured * dim() + prepared];
  }
  double uncertainty(std::size_t measured, std::size_t prepared) const;
  bool has_uncertainty() const { return !uncertainty_.empty(); }

  std::span<const double> entries() const { return entries_; }
  Eigen::MatrixXd matrix() const;

  /// C * p.
  std::vector<double> apply(std::span<const double> p) const;

  bool is_identity(double tol = 0.0) const;

  /// "# confusion n=<qubits>" header, one CSV row per measured outcome, then an
  /// optional "# uncertainty" block of the same shape.
  std::string to_csv() const;
  static ConfusionMatrix from_csv(std::string_view text);

 private:
  int n_qubits_ = 0;
  std::vector<double> entries_;
  std::vector<double> uncertainty_;
};

}  // namespace remsim
