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

#include "remsim/chemdata.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace remsim {
namespace {

struct H2Row {
  double r, ii, iz, zi, zz, xx, v_nn, e_ref, e_min, theta_raw, theta_mit;
};

constexpr std::array<H2Row, 12> kH2 = {{
    {0.45, -0.908, 0.634, -0.634, -0.013, 0.167, 1.1759, -0.9875, -0.9984, -0.1186, -0.1272},
    {0.55, -0.981, 0.536, -0.536, -0.012, 0.171, 0.9621, -1.0791, -1.0926, -0.1437, -0.1540},
    {0.65, -1.028, 0.455, -0.455, -0.012, 0.176, 0.8141, -1.1130, -1.1299, -0.1737, -0.1861},
    {0.70, -1.044, 0.420, -0.420, -0.012, 0.179, 0.7560, -1.1173, -1.1362, -0.1906, -0.2042},
    {0.7414, -1.054, 0.394, -0.394, -0.011, 0.181, 0.7138, -1.1167, -1.1373, -0.2056, -0.2202},
    {0.80, -1.063, 0.360, -0.360, -0.011, 0.185, 0.6615, -1.1109, -1.1341, -0.2284, -0.2445},
    {0.85, -1.068, 0.334, -0.334, -0.010, 0.188, 0.6226, -1.1025, -1.1284, -0.2495, -0.2669},
    {1.00, -1.069, 0.268, -0.268, -0.009, 0.197, 0.5292, -1.0661, -1.1012, -0.3220, -0.3438},
    {1.15, -1.058, 0.215, -0.215, -0.007, 0.206, 0.4602, -1.0210, -1.0679, -0.4106, -0.4372},
    {1.35, -1.033, 0.161, -0.161, -0.005, 0.220, 0.3920, -0.9572, -1.0251, -0.5553, -0.5876},
    {1.50, -1.010, 0.129, -0.129, -0.004, 0.230, 0.3528, -0.9109, -0.9981, -0.6802, -0.7153},
    {1.65, -0.985, 0.103, -0.103, -0.003, 0.239, 0.3207, -0.8678, -0.9771, -0.8121, -0.8477},
}};

// r, exact_ref, vqe_ref, vqe*_ref, exact_min, vqe_min, vqe*_min, rem, rem*, dvqe, dvqe*, drem, drem*
using RunRow = std::array<double, 13>;

constexpr std::array<RunRow, 12> kH2Runs = {{
    {0.45, -0.9875, -0.8524, -0.9446, -0.9984, -0.8604, -0.9546, -0.9955, -0.9975, 0.1380, 0.0438, 0.0029, 0.0010},
    {0.55, -1.0791, -0.9649, -1.0426, -1.0926, -0.9749, -1.0550, -1.0890, -1.0914, 0.1178, 0.0376, 0.0036, 0.0012},
    {0.65, -1.1130, -1.0162, -1.0820, -1.1299, -1.0287, -1.0974, -1.1254, -1.1284, 0.1013, 0.0325, 0.0045, 0.0015},
    {0.70, -1.1173, -1.0281, -1.0886, -1.1362, -1.0419, -1.1058, -1.1312, -1.1345, 0.0943, 0.0304, 0.0050, 0.0017},
    {0.7414, -1.1167, -1.0331, -1.0897, -1.1373, -1.0482, -1.1085, -1.1318, -1.1355, 0.0891, 0.0288, 0.0055,
     0.0018},
    {0.80, -1.1109, -1.0345, -1.0861, -1.1341, -1.0516, -1.1073, -1.1280, -1.1321, 0.0825, 0.0268, 0.0062, 0.0020},
    {0.85, -1.1025, -1.0317, -1.0794, -1.1284, -1.0507, -1.1030, -1.1215, -1.1261, 0.0776, 0.0253, 0.0068, 0.0023},
    {1.00, -1.0661, -1.0093, -1.0473, -1.1012, -1.0352, -1.0793, -1.0919, -1.0981, 0.0660, 0.0219, 0.0092, 0.0030},
    {1.15, -1.0210, -0.9752, -1.0054, -1.0679, -1.0099, -1.0483, -1.0557, -1.0639, 0.0580, 0.0196, 0.0122, 0.0040},
    {1.35, -0.9572, -0.9227, -0.9449, -1.0251, -0.9733, -1.0072, -1.0078, -1.0195, 0.0517, 0.0179, 0.0172, 0.0056},
    {1.50, -0.9109, -0.8830, -0.9005, -0.9981, -0.9486, -0.9808, -0.9765, -0.9912, 0.0495, 0.0173, 0.0216, 0.0070},
    {1.65, -0.8678, -0.8452, -0.8590, -0.9771, -0.9283, -0.9599, -0.9508, -0.9688, 0.0489, 0.0172, 0.0263, 0.0084},
}};

struct HehRow {
  double r, ii, iz, zi, zz, zx, xz, ix, xi, xx, v_nn, t0, t1, t2;
};

constexpr std::array<HehRow, 10> kHeh = {{
    {0.65, -3.229, 0.635, -0.635, -0.074, -0.094, 0.094, 0.094, 0.094, 0.157, 1.6282, 0.011, 0.008, -0.061},
    {0.7899, -3.161, 0.560, -0.560, -0.097, -0.106, 0.106, 0.106, 0.106, 0.144, 1.3399, 0.014, 0.016, -0.067},
    {0.85, -3.129, 0.538, -0.538, -0.108, -0.111, 0.111, 0.111, 0.111, 0.137, 1.2451, 0.013, 0.010, -0.065},
    {0.90, -3.101, 0.523, -0.523, -0.118, -0.114, 0.114, 0.114, 0.114, 0.131, 1.1759, 0.012, 0.013, -0.063},
    {0.95, -3.073, 0.512, -0.512, -0.128, -0.117, 0.117, 0.117, 0.117, 0.124, 1.1141, 0.017, 0.015, -0.065},
    {1.00, -3.045, 0.503, -0.503, -0.139, -0.119, 0.119, 0.119, 0.119, 0.117, 1.0584, 0.021, 0.021, -0.063},
    {1.15, -2.962, 0.488, -0.488, -0.173, -0.122, 0.122, 0.122, 0.122, 0.095, 0.9203, 0.017, 0.017, -0.053},
    {1.35, -2.857, 0.488, -0.488, -0.217, -0.115, 0.115, 0.115, 0.115, 0.066, 0.7840, 0.012, 0.012, -0.036},
    {1.5, -2.785, 0.495, -0.495, -0.247, -0.104, 0.104, 0.104, 0.104, 0.047, 0.7056, 0.009, 0.003, -0.025},
    {1.65, -2.721, 0.506, -0.506, -0.273, -0.090, 0.090, 0.090, 0.090, 0.032, 0.6414, 0.008, 0.005, -0.018},
}};

constexpr std::array<RunRow, 9> kHehRuns = {{
    {0.65, -2.7964, -2.7580, -2.7604, -2.8062, -2.7673, -2.7703, -2.8057, -2.8063, 0.0389, 0.0359, 0.0005, -0.0001},
    {0.7899, -2.8447, -2.8110, -2.8150, -2.8542, -2.8203, -2.8247, -2.8540, -2.8544, 0.0338, 0.0294, 0.0002,
     -0.0002},
    {0.85, -2.8517, -2.8195, -2.8225, -2.8608, -2.8278, -2.8305, -2.8600, -2.8597, 0.0330, 0.0302, 0.0008, 0.0010},
    {0.90, -2.8540, -2.8244, -2.8261, -2.8626, -2.8326, -2.8359, -2.8622, -2.8638, 0.0300, 0.0267, 0.0004, -0.0012},
    {0.95, -2.8542, -2.8253, -2.8267, -2.8622, -2.8324, -2.8353, -2.8614, -2.8629, 0.0298, 0.0269, 0.0008, -0.0007},
    {1.00, -2.8529, -2.8252, -2.8270, -2.8602, -2.8315, -2.8339, -2.8592, -2.8598, 0.0287, 0.0263, 0.0010, 0.0004},
    {1.15, -2.8445, -2.8181, -2.8206, -2.8495, -2.8233, -2.8261, -2.8497, -2.8500, 0.0262, 0.0235, -0.0002, -0.0004},
    {1.35, -2.8314, -2.8076, -2.8093, -2.8339, -2.8095, -2.8120, -2.8333, -2.8341, 0.0243, 0.0219, 0.0005, -0.0003},
    {1.5, -2.8234, -2.8008, -2.8013, -2.8247, -2.8017, -2.8029, -2.8244, -2.8251, 0.0230, 0.0218, 0.0003, -0.0004},
}};

constexpr RunRow kLihRun = {1.5949, -7.8620, -7.6064, -7.6071, -7.8787, -7.6071, -7.6102,
                            -7.8627, -7.8651, 0.2717, 0.2686, 0.0160, 0.0136};

constexpr double kLihR = 1.5949;
constexpr double kLihFrozenCore = -7.7983328;
constexpr double kLihNuclearRepulsion = 0.99538004;

const std::vector<std::pair<std::string, double>>& lih_terms() {
  static const std::vector<std::pair<std::string, double>> terms = {
    {"IIII", -0.207}, {"ZXIZ", 0.012}, {"XZIZ", -0.013}, {"YYXZ", 0.008}, {"IIIZ", -0.094}, {"IXZX", -0.003},
    {"XIZX", -0.002}, {"XXXZ", -0.008}, {"IIZX", -0.003}, {"ZXZX", -0.003}, {"XZZX", 0.002}, {"YYXI", 0.008},
    {"IIIX", 0.003}, {"IXIX", 0.003}, {"XIIX", 0.002}, {"XXXI", -0.008}, {"IIXX", -0.001}, {"ZXIX", 0.003},
    {"XZIX", -0.002}, {"ZZZZ", 0.084}, {"IIYY", 0.001}, {"IXXX", -0.009}, {"XIXX", -0.008}, {"ZZXZ", -0.009},
    {"IIZZ", -0.212}, {"ZXXX", -0.009}, {"XZXX", 0.008}, {"ZZXI", -0.009}, {"IIXZ", 0.019}, {"IXYY", 0.009},
    {"XIYY", 0.008}, {"XIZZ", -0.009}, {"IIXI", 0.019}, {"ZXYY", 0.009}, {"XZYY", -0.008}, {"XZZZ", 0.009},
    {"IIZI", 0.359}, {"YYIZ", 0.032}, {"ZIIZ", 0.114}, {"XIXZ", 0.007}, {"IZII", 0.094}, {"XXIZ", -0.032},
    {"ZIZX", -0.011}, {"XZXZ", -0.007}, {"ZXII", 0.003}, {"YYZX", -0.009}, {"ZIIX", 0.011}, {"XIXI", 0.007},
    {"IXII", 0.003}, {"XXZX", 0.009}, {"ZIXX", -0.034}, {"XZXI", -0.007}, {"XXII", -0.001}, {"YYIX", 0.009},
    {"ZIYY", 0.034}, {"ZIZZ", 0.060}, {"YYII", 0.001}, {"XXIX", -0.009}, {"IZZZ", -0.056}, {"ZIXZ", 0.011},
    {"ZZII", -0.212}, {"YYXX", -0.031}, {"IZXZ", -0.013}, {"ZIXI", 0.011}, {"XZII", -0.019}, {"XXXX", 0.031},
    {"IZXI", -0.013}, {"IZZI", 0.114}, {"XIII", 0.019}, {"YYYY", 0.031}, {"IXZZ", -0.002}, {"IXZI", -0.011},
    {"ZIII", -0.359}, {"XXYY", -0.031}, {"ZXZZ", -0.002}, {"ZXZI", -0.011}, {"IZIZ", -0.122},
    {"ZZIZ", 0.056}, {"IXXZ", 0.002}, {"YYZI", -0.034}, {"IZZX", 0.012}, {"ZZZX", 0.002}, {"ZXXZ", 0.002},
    {"XXZI", 0.034}, {"IZIX", -0.012}, {"ZZIX", -0.002}, {"IXXI", 0.002}, {"ZZZI", -0.060}, {"IZXX", 0.032},
    {"ZZXX", 0.003}, {"ZXXI", 0.002}, {"XIZI", -0.011}, {"IZYY", -0.032}, {"ZZYY", -0.003}, {"YYZZ", -0.003},
    {"XZZI", 0.011}, {"IXIZ", 0.012}, {"XIIZ", 0.013}, {"XXZZ", 0.003}, {"ZIZI", -0.113},
  };
  return terms;
}

constexpr std::array<double, 12> kLihAngles = {3.8987, -6.5469, -1.2442, -5.0653, 1.5509, 2.0379,
                                               3.1205, -4.7523, 2.3617, 6.2591, -5.9394, 3.2559};

PublishedRun to_run(const RunRow& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11], v[12]};
}

PauliHamiltonian two_qubit(std::initializer_list<std::pair<const char*, double>> terms, double offset) {
  std::vector<std::pair<std::string, double>> t;
  for (const auto& [l, c] : terms) t.emplace_back(l, c);
  return PauliHamiltonian::from_labels(2, t, offset);
}

MoleculeDataset make_h2() {
  MoleculeDataset ds;
  ds.name = "h2";
  ds.n_qubits = 2;
  ds.n_orbitals = 2;
  ds.n_alpha = 1;
  ds.n_beta = 1;
  ds.equilibrium_r = 0.7414;
  ds.default_ansatz = AnsatzFamily::CompactUccd;
  for (const auto& row : kH2) {
    Geometry g;
    g.r = row.r;
    g.v_nn = row.v_nn;
    g.hamiltonian =
        two_qubit({{"II", row.ii}, {"IZ", row.iz}, {"ZI", row.zi}, {"ZZ", row.zz}, {"XX", row.xx}}, row.v_nn);
    g.reference = ReferenceEnergies{row.e_ref, row.e_min};
    g.device_angles = {row.theta_mit};
    ds.geometries.push_back(std::move(g));
  }
  for (const auto& row : kH2Runs) ds.published_runs.push_back(to_run(row));
  return ds;
}

MoleculeDataset make_heh() {
  MoleculeDataset ds;
  ds.name = "heh+";
  ds.n_qubits = 2;
  ds.n_orbitals = 2;
  ds.n_alpha = 1;
  ds.n_beta = 1;
  ds.equilibrium_r = 0.7899;
  ds.default_ansatz = AnsatzFamily::Uccsd;
  for (const auto& row : kHeh) {
    Geometry g;
    g.r = row.r;
    g.v_nn = row.v_nn;
    g.hamiltonian = two_qubit({{"II", row.ii},
                               {"IZ", row.iz},
                               {"ZI", row.zi},
                               {"ZZ", row.zz},
                               {"ZX", row.zx},
                               {"XZ", row.xz},
                               {"IX", row.ix},
                               {"XI", row.xi},
                               {"XX", row.xx}},
                              row.v_nn);
    g.device_angles = {row.t0, row.t1, row.t2};
    ds.geometries.push_back(std::move(g));
  }
  for (const auto& row : kHehRuns) {
    ds.published_runs.push_back(to_run(row));
    for (auto& g : ds.geometries)
      if (std::abs(g.r - row[0]) < 1e-9) g.reference = ReferenceEnergies{row[1], row[4]};
  }
  return ds;
}

MoleculeDataset make_lih() {
  MoleculeDataset ds;
  ds.name = "lih";
  ds.n_qubits = 4;
  ds.n_orbitals = 3;
  ds.n_alpha = 1;
  ds.n_beta = 1;
  ds.frozen_core = kLihFrozenCore;
  ds.equilibrium_r = kLihR;
  ds.default_ansatz = AnsatzFamily::HardwareEfficient;
  Geometry g;
  g.r = kLihR;
  g.v_nn = kLihNuclearRepulsion;
  g.hamiltonian = PauliHamiltonian::from_labels(4, lih_terms(), kLihFrozenCore + kLihNuclearRepulsion);
  g.reference = ReferenceEnergies{kLihRun[1], kLihRun[4]};
  g.device_angles.assign(kLihAngles.begin(), kLihAngles.end());
  ds.geometries.push_back(std::move(g));
  ds.published_runs.push_back(to_run(kLihRun));
  return ds;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(std::string_view text, int line_no) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw std::invalid_argument(fmt::format("line {}: '{}' is not a real number", line_no, s));
  return v;
}

}  // namespace

const Geometry& MoleculeDataset::at(double r) const {
  for (const auto& g : geometries)
    if (std::abs(g.r - r) < 1e-9) return g;
  throw std::invalid_argument(fmt::format("{} has no geometry at r = {}", name, r));
}

std::string MoleculeDataset::hf_bitstring() const { return parity_hf_bitstring(n_orbitals, n_alpha, n_beta); }

AnsatzSpec MoleculeDataset::ansatz(AnsatzFamily family) const {
  switch (family) {
    case AnsatzFamily::CompactUccd: {
      if (n_qubits != 2) throw std::invalid_argument(fmt::format("compact ansatz is two-qubit only, {} has {}", name, n_qubits));
      return compact_spec();
    }
    case AnsatzFamily::Uccsd:
      return uccsd_spec(n_orbitals, n_alpha, n_beta);
    case AnsatzFamily::HardwareEfficient: {
      std::vector<std::pair<int, int>> map;
      if (n_qubits == 4) {
        map = t_shaped_map();
      } else {
        for (int q = 0; q + 1 < n_qubits; ++q) map.emplace_back(q, q + 1);
      }
      return hardware_efficient_spec(n_qubits, 2, std::move(map), RotationPattern::RY, hf_bitstring());
    }
  }
  throw std::logic_error("unreachable");
}

MoleculeDataset builtin(std::string_view name) {
  const std::string key = lowercase(name);
  if (key == "h2") return make_h2();
  if (key == "heh+" || key == "heh") return make_heh();
  if (key == "lih") return make_lih();
  if (key == "beh2")
    throw std::invalid_argument(
        "beh2 has no embedded Hamiltonian; supply one with --hamiltonian <file> (qubits=, offset=, '<label> <coeff>' lines)");
  throw std::invalid_argument(fmt::format("unknown molecule '{}' (expected h2, heh+ or lih)", name));
}

std::vector<std::string> builtin_names() { return {"h2", "heh+", "lih"}; }

ReferenceEnergies reference_energy(const MoleculeDataset& ds, double r) {
  const Geometry& g = ds.at(r);
  if (!g.reference) throw std::invalid_argument(fmt::format("{} at r = {} has no published reference energies", ds.name, r));
  return *g.reference;
}

std::vector<SummaryRow> equilibrium_summary() {
  return {
      {"H2", false, -1.1373, -1.1085, -1.1355, 0.0288, 0.0018},
      {"HeH+", false, -2.8542, -2.8247, -2.8544, 0.0294, -0.0002},
      {"LiH", false, -7.8787, -7.6071, -7.8651, 0.2686, 0.0136},
      {"LiH", true, -7.8811, -7.3599, -7.8705, 0.5213, 0.0106},
      {"BeH2", true, -15.5895, -13.9873, -15.5632, 1.6021, 0.0263},
  };
}

std::vector<ComplexityRow> circuit_complexity_table() {
  return {
      {"H2", "Simplified UCCD", 2, 5, 1, 1},     {"HeH+", "UCCSD", 2, 14, 4, 2},
      {"LiH", "Hardware-efficient", 4, 9, 6, 8}, {"LiH", "UCCSD", 4, 275, 172, 8},
      {"BeH2", "UCCSD", 6, 1480, 1096, 26},
  };
}

ConfusionMatrix device_confusion() {
  // Rows measured, columns prepared, both in the order 00, 10, 01, 11 (percent).
  constexpr double kPercent[4][4] = {
      {96.8, 5.9, 5.9, 0.4}, {1.1, 92.1, 0.1, 5.6}, {2.0, 0.1, 93.0, 5.7}, {0.0, 1.9, 1.1, 88.4}};
  constexpr double kSpread[4][4] = {
      {0.21, 0.59, 0.67, 0.08}, {0.12, 0.57, 0.03, 0.56}, {0.15, 0.04, 0.69, 0.58}, {0.01, 0.17, 0.13, 0.86}};
  constexpr std::size_t kIndex[4] = {0, 2, 1, 3};
  std::vector<double> e(16), u(16);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      e[kIndex[r] * 4 + kIndex[c]] = kPercent[r][c] / 100.0;
      u[kIndex[r] * 4 + kIndex[c]] = kSpread[r][c] / 100.0;
    }
  return ConfusionMatrix::column_normalized(2, std::move(e), std::move(u));
}

PauliHamiltonian parse_hamiltonian(std::string_view text) {
  std::optional<int> n_qubits;
  double offset = 0.0;
  std::vector<std::pair<std::string, double>> terms;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (const auto eq = line.find('='); eq != std::string_view::npos) {
      const std::string key = lowercase(trim(line.substr(0, eq)));
      const std::string_view value = trim(line.substr(eq + 1));
      if (key == "qubits") {
        const double v = parse_real(value, line_no);
        if (v != std::floor(v) || v < 1 || v > PauliString::kMaxQubits)
          throw std::invalid_argument(fmt::format("line {}: qubit count must be an integer in 1..{}", line_no,
                                                  PauliString::kMaxQubits));
        if (!terms.empty() && static_cast<int>(v) != static_cast<int>(terms.front().first.size()))
          throw std::invalid_argument(fmt::format("line {}: qubits={} disagrees with earlier labels", line_no, v));
        n_qubits = static_cast<int>(v);
      } else if (key == "offset") {
        offset = parse_real(value, line_no);
      } else {
        throw std::invalid_argument(fmt::format("line {}: unknown header '{}'", line_no, key));
      }
      continue;
    }
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos)
      throw std::invalid_argument(fmt::format("line {}: expected '<label> <coefficient>'", line_no));
    std::string label(line.substr(0, space));
    const double coeff = parse_real(trim(line.substr(space)), line_no);
    for (char& c : label) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (label.find_first_not_of("IXYZ") != std::string::npos)
      throw std::invalid_argument(fmt::format("line {}: '{}' is not a Pauli label", line_no, label));
    const int width = n_qubits ? *n_qubits : (terms.empty() ? static_cast<int>(label.size())
                                                            : static_cast<int>(terms.front().first.size()));
    if (static_cast<int>(label.size()) != width)
      throw std::invalid_argument(
          fmt::format("line {}: label '{}' has {} qubits, expected {}", line_no, label, label.size(), width));
    terms.emplace_back(std::move(label), coeff);
  }
  if (terms.empty()) throw std::invalid_argument("hamiltonian has no terms");
  const int n = n_qubits ? *n_qubits : static_cast<int>(terms.front().first.size());
  return PauliHamiltonian::from_labels(n, terms, offset);
}

PauliHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument(fmt::format("cannot open hamiltonian file '{}'", path));
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_hamiltonian(ss.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(fmt::format("{}: {}", path, e.what()));
  }
}

std::string dump_hamiltonian(const PauliHamiltonian& h) {
  std::string out = fmt::format("qubits={}\noffset={}\n", h.n_qubits(), h.offset());
  for (const auto& t : h.terms()) out += fmt::format("{} {}\n", t.pauli.label(), t.coeff);
  return out;
}

}  // namespace remsim
