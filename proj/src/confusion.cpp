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

#include "remsim/confusion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace remsim {
namespace {

std::size_t checked_dim(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 12) throw std::invalid_argument("confusion matrix needs 1..12 qubits");
  return std::size_t{1} << n_qubits;
}

std::vector<double> parse_row(const std::string& line, std::size_t dim, int line_no) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      row.push_back(std::stod(cell, &used));
      for (std::size_t k = used; k < cell.size(); ++k)
        if (!std::isspace(static_cast<unsigned char>(cell[k]))) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt::format("line {}: bad number '{}'", line_no, cell));
    }
  }
  if (row.size() != dim)
    throw std::invalid_argument(fmt::format("line {}: expected {} values, got {}", line_no, dim, row.size()));
  return row;
}

}  // namespace

ConfusionMatrix::ConfusionMatrix(int n_qubits, std::vector<double> entries, std::vector<double> uncertainty)
    : n_qubits_(n_qubits), entries_(std::move(entries)), uncertainty_(std::move(uncertainty)) {
  const std::size_t d = checked_dim(n_qubits);
  if (entries_.size() != d * d) throw std::invalid_argument("confusion matrix must be 2^n x 2^n");
  if (!uncertainty_.empty() && uncertainty_.size() != d * d)
    throw std::invalid_argument("uncertainty must match the confusion matrix shape");
  for (double v : entries_)
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("confusion entries must lie in [0, 1]");
  for (std::size_t i = 0; i < d; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += entries_[j * d + i];
    if (std::abs(s - 1.0) > 1e-9)
      throw std::invalid_argument(fmt::format("confusion column {} sums to {}, not 1", i, s));
  }
}

ConfusionMatrix ConfusionMatrix::column_normalized(int n_qubits, std::vector<double> entries,
                                                   std::vector<double> uncertainty) {
  const std::size_t d = checked_dim(n_qubits);
  if (entries.size() != d * d) throw std::invalid_argument("confusion matrix must be 2^n x 2^n");
  for (std::size_t i = 0; i < d; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += entries[j * d + i];
    if (!(s > 0.0)) throw std::invalid_argument(fmt::format("confusion column {} has no mass", i));
    for (std::size_t j = 0; j < d; ++j) {
      entries[j * d + i] /= s;
      if (!uncertainty.empty()) uncertainty.at(j * d + i) /= s;
    }
  }
  return ConfusionMatrix(n_qubits, std::move(entries), std::move(uncertainty));
}

ConfusionMatrix ConfusionMatrix::identity(int n_qubits) {
  const std::size_t d = checked_dim(n_qubits);
  std::vector<double> e(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1.0;
  return ConfusionMatrix(n_qubits, std::move(e));
}

ConfusionMatrix ConfusionMatrix::uniform(int n_qubits) {
  const std::size_t d = checked_dim(n_qubits);
  return ConfusionMatrix(n_qubits, std::vector<double>(d * d, 1.0 / static_cast<double>(d)));
}

ConfusionMatrix ConfusionMatrix::independent(std::span<const double> p01, std::span<const double> p10) {
  if (p01.size() != p10.size()) throw std::invalid_argument("p01 and p10 must have the same length");
  const int n = static_cast<int>(p01.size());
  const std::size_t d = checked_dim(n);
  std::vector<double> e(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      double p = 1.0;
      for (int q = 0; q < n; ++q) {
        const bool in = (i >> q) & 1U;
        const bool out = (j >> q) & 1U;
        const double flip = in ? p10[static_cast<std::size_t>(q)] : p01[static_cast<std::size_t>(q)];
        p *= (in == out) ? 1.0 - flip : flip;
      }
      e[j * d + i] = p;
    }
  }
  return ConfusionMatrix(n, std::move(e));
}

double ConfusionMatrix::uncertainty(std::size_t measured, std::size_t prepared) const {
  if (uncertainty_.empty()) return 0.0;
  return uncertainty_[measured * dim() + prepared];
}

Eigen::MatrixXd ConfusionMatrix::matrix() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd m(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) m(j, i) = entries_[static_cast<std::size_t>(j * d + i)];
  return m;
}

std::vector<double> ConfusionMatrix::apply(std::span<const double> p) const {
  const std::size_t d = dim();
  if (p.size() != d) throw std::invalid_argument("distribution size does not match confusion matrix");
  std::vector<double> out(d, 0.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) out[j] += entries_[j * d + i] * p[i];
  return out;
}

bool ConfusionMatrix::is_identity(double tol) const {
  const std::size_t d = dim();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (std::abs(entries_[j * d + i] - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

std::string ConfusionMatrix::to_csv() const {
  const std::size_t d = dim();
  std::string out = fmt::format("# confusion n={}\n", n_qubits_);
  auto block = [&](const std::vector<double>& v) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) out += (i ? "," : "") + fmt::format("{}", v[j * d + i]);
      out += '\n';
    }
  };
  block(entries_);
  if (!uncertainty_.empty()) {
    out += "# uncertainty\n";
    block(uncertainty_);
  }
  return out;
}

ConfusionMatrix ConfusionMatrix::from_csv(std::string_view text) {
  std::stringstream ss{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = 0;
  std::vector<double> entries;
  std::vector<double> unc;
  bool in_uncertainty = false;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      if (line.rfind("# confusion n=", 0) == 0) {
        try {
          n = std::stoi(line.substr(14));
        } catch (const std::exception&) {
          throw std::invalid_argument(fmt::format("line {}: bad qubit count", line_no));
        }
        checked_dim(n);
      } else if (line.rfind("# uncertainty", 0) == 0) {
        in_uncertainty = true;
      }
      continue;
    }
    if (n == 0) throw std::invalid_argument(fmt::format("line {}: missing '# confusion n=' header", line_no));
    const std::size_t d = std::size_t{1} << n;
    auto row = parse_row(line, d, line_no);
    auto& dst = in_uncertainty ? unc : entries;
    if (dst.size() >= d * d) throw std::invalid_argument(fmt::format("line {}: too many rows", line_no));
    dst.insert(dst.end(), row.begin(), row.end());
  }
  if (n == 0) throw std::invalid_argument("missing '# confusion n=' header");
  return ConfusionMatrix(n, std::move(entries), std::move(unc));
}

}  // namespace remsim
