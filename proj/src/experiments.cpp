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

#include "remsim/experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"

namespace remsim {
namespace {

constexpr std::uint64_t kCalibrationStream = 0xCA11B8A7EULL;
constexpr std::uint64_t kSpsaStream = 0x5B5AULL;

// Runs fn(i) for i in [0, n) on a small worker pool; results keep input order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F fn) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::min<std::size_t>(n, std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

AnsatzFamily family_for(const RunConfig& cfg, const std::optional<MoleculeDataset>& ds, int n_qubits) {
  if (cfg.ansatz) return *cfg.ansatz;
  if (ds) return ds->default_ansatz;
  return n_qubits == 2 ? AnsatzFamily::CompactUccd : AnsatzFamily::HardwareEfficient;
}

AnsatzSpec file_ansatz(const RunConfig& cfg, AnsatzFamily family, int n_qubits) {
  switch (family) {
    case AnsatzFamily::CompactUccd:
      if (n_qubits != 2) throw ConfigError("--ansatz compact needs a two-qubit Hamiltonian");
      return compact_spec();
    case AnsatzFamily::Uccsd: {
      if (cfg.orbitals == 0) throw ConfigError("--ansatz uccsd with --hamiltonian needs --orbitals, --alpha, --beta");
      AnsatzSpec s = uccsd_spec(cfg.orbitals, cfg.alpha, cfg.beta);
      if (s.n_qubits != n_qubits)
        throw ConfigError(fmt::format("{} orbitals give {} qubits, Hamiltonian has {}", cfg.orbitals, s.n_qubits,
                                      n_qubits));
      return s;
    }
    case AnsatzFamily::HardwareEfficient: {
      std::vector<std::pair<int, int>> map;
      if (n_qubits == 4) {
        map = t_shaped_map();
      } else {
        for (int q = 0; q + 1 < n_qubits; ++q) map.emplace_back(q, q + 1);
      }
      const std::string hf = cfg.hf_bitstring.empty() ? std::string(static_cast<std::size_t>(n_qubits), '0')
                                                      : cfg.hf_bitstring;
      if (static_cast<int>(hf.size()) != n_qubits)
        throw ConfigError(fmt::format("--hf '{}' does not have {} bits", hf, n_qubits));
      return hardware_efficient_spec(n_qubits, 2, std::move(map), RotationPattern::RY, hf);
    }
  }
  throw std::logic_error("unreachable");
}

std::string energy(double e) { return fmt::format("{:.6f}", e); }

void write_csv_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

void RunConfig::validate() const {
  if (molecule.empty() == hamiltonian_path.empty())
    throw ConfigError("give exactly one of --molecule and --hamiltonian");
  if (!molecule.empty()) {
    try {
      (void)builtin(molecule);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (!std::filesystem::exists(hamiltonian_path)) {
    throw ConfigError(fmt::format("hamiltonian file '{}' does not exist", hamiltonian_path));
  }
  if (!(p2 >= 0.0 && p2 <= 1.0)) throw ConfigError("--p2 must lie in [0, 1]");
  if (p1 && !(*p1 >= 0.0 && *p1 <= 1.0)) throw ConfigError("--p1 must lie in [0, 1]");
  if (!(effective_p1() <= 1.0)) throw ConfigError("0.1 * p2 exceeds 1");
  if (backend == BackendKind::Ideal && (p2 > 0.0 || (p1 && *p1 > 0.0)))
    throw ConfigError("gate noise (--p2/--p1) requires --backend noisy");
  if (grid_points < 4) throw ConfigError("sweep grid needs at least four points");
  if (max_evals < 1) throw ConfigError("--max-evals must be positive");
  if (calibration_shots == 0 || calibration_repeats < 1)
    throw ConfigError("calibration needs positive shots and repeats");
  for (std::size_t i = 0; i < p2_grid.size(); ++i) {
    if (!(p2_grid[i] > 0.0 && p2_grid[i] <= 1.0)) throw ConfigError("noise grid values must lie in (0, 1]");
    if (i > 0 && !(p2_grid[i] > p2_grid[i - 1])) throw ConfigError("noise grid must be strictly increasing");
  }
  if (confusion != "ideal" && confusion != "figure-s2" && confusion != "calibrate" &&
      !std::filesystem::exists(confusion))
    throw ConfigError(fmt::format("--confusion '{}' is neither ideal, figure-s2, calibrate nor an existing file",
                                  confusion));
  if (!hf_bitstring.empty() && hf_bitstring.find_first_not_of("01") != std::string::npos)
    throw ConfigError("--hf must be a binary label");
  if (orbitals != 0 && (orbitals < 2 || alpha < 0 || beta < 0 || alpha > orbitals || beta > orbitals))
    throw ConfigError("--orbitals/--alpha/--beta describe an impossible occupation");
  if (!hamiltonian_path.empty() && rem && ansatz) {
    if (*ansatz == AnsatzFamily::HardwareEfficient && hf_bitstring.empty())
      throw ConfigError("--mitigation rem needs a reference state: pass --hf <bits> for a file Hamiltonian");
    if (*ansatz == AnsatzFamily::Uccsd && orbitals == 0)
      throw ConfigError("--mitigation rem with --ansatz uccsd needs --orbitals, --alpha, --beta");
  }
  if (optimizer == OptimizerChoice::Sweep && ansatz && *ansatz != AnsatzFamily::CompactUccd)
    throw ConfigError("--optimizer sweep needs the one-parameter compact ansatz");
}

std::vector<Problem> resolve_problems(const RunConfig& cfg, bool all_geometries) {
  std::vector<Problem> out;
  if (!cfg.hamiltonian_path.empty()) {
    PauliHamiltonian h;
    try {
      h = load_hamiltonian(cfg.hamiltonian_path);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const AnsatzFamily f = family_for(cfg, std::nullopt, h.n_qubits());
    if (cfg.rem && f == AnsatzFamily::HardwareEfficient && cfg.hf_bitstring.empty())
      throw ConfigError("--mitigation rem needs a reference state: pass --hf <bits> for a file Hamiltonian");
    out.push_back({h, file_ansatz(cfg, f, h.n_qubits()), cfg.r.value_or(0.0)});
    return out;
  }
  const MoleculeDataset ds = builtin(cfg.molecule);
  AnsatzSpec spec;
  try {
    spec = ds.ansatz(family_for(cfg, ds, ds.n_qubits));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (all_geometries) {
    for (const auto& g : ds.geometries) out.push_back({g.hamiltonian, spec, g.r});
  } else {
    const double r = cfg.r.value_or(ds.equilibrium_r);
    try {
      out.push_back({ds.at(r).hamiltonian, spec, r});
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

std::optional<ConfusionMatrix> readout_truth(const RunConfig& cfg, int n_qubits) {
  if (cfg.confusion == "ideal") return std::nullopt;
  if (cfg.confusion == "figure-s2" || cfg.confusion == "calibrate") {
    if (n_qubits != 2) throw ConfigError("the device readout matrix is two-qubit; use a CSV file for other sizes");
    return device_confusion();
  }
  std::ifstream f(cfg.confusion);
  std::stringstream ss;
  ss << f.rdbuf();
  ConfusionMatrix c;
  try {
    c = ConfusionMatrix::from_csv(ss.str());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("{}: {}", cfg.confusion, e.what()));
  }
  if (c.n_qubits() != n_qubits)
    throw ConfigError(fmt::format("{} is a {}-qubit matrix, problem has {} qubits", cfg.confusion, c.n_qubits(),
                                  n_qubits));
  return c;
}

std::optional<ConfusionMatrix> mitigation_matrix(const RunConfig& cfg, int n_qubits) {
  auto truth = readout_truth(cfg, n_qubits);
  if (!truth || cfg.confusion != "calibrate") return truth;
  return calibrate_confusion(simulated_readout(*truth), n_qubits, cfg.calibration_shots, cfg.calibration_repeats,
                             derive_seed(cfg.seed, kCalibrationStream));
}

PointResult run_point(const Problem& problem, const RunConfig& cfg, double p2, double p1, std::uint64_t seed) {
  const Circuit circuit = build_ansatz(problem.ansatz);
  const int n_params = circuit.n_params();
  const std::vector<double> zeros(static_cast<std::size_t>(n_params), 0.0);
  const std::vector<double> grid = uniform_grid(cfg.grid_points);

  OptimizerChoice choice = cfg.optimizer;
  if (choice == OptimizerChoice::Auto) {
    if (n_params == 1) choice = OptimizerChoice::Sweep;
    else if (cfg.backend == BackendKind::Noisy && cfg.shots > 0) choice = OptimizerChoice::Spsa;
    else choice = OptimizerChoice::NelderMead;
  }
  if (choice == OptimizerChoice::Sweep && n_params != 1)
    throw ConfigError("--optimizer sweep needs a one-parameter ansatz");

  PointResult res;
  res.r = problem.r;
  const EnergyEvaluator exact(problem.hamiltonian, circuit);
  res.e_exact_ref = exact.exact(zeros);
  if (n_params == 1) {
    res.e_exact_min = sweep_and_fit(exact, grid).fit.e_min;
  } else {
    OptimizerConfig tight;
    tight.ftol = 1e-10;
    tight.xtol = 1e-7;
    tight.max_evals = std::max(cfg.max_evals, 20000);
    tight.restarts = 3;
    res.e_exact_min = minimize(exact, zeros, tight).energy;
  }

  EvaluatorOptions opts;
  opts.backend = cfg.backend;
  opts.shots = cfg.backend == BackendKind::Noisy ? cfg.shots : 0;
  opts.seed = seed;
  opts.noise.p2 = p2;
  opts.noise.p1 = p1;
  if (cfg.backend == BackendKind::Noisy) opts.noise.confusion = readout_truth(cfg, problem.hamiltonian.n_qubits());
  const EnergyEvaluator raw(problem.hamiltonian, circuit, opts);
  EvaluatorOptions ro_opts = opts;
  if (cfg.backend == BackendKind::Noisy) ro_opts.mitigation = mitigation_matrix(cfg, problem.hamiltonian.n_qubits());
  const EnergyEvaluator readout(problem.hamiltonian, circuit, ro_opts);
  const bool stochastic = cfg.backend == BackendKind::Noisy && cfg.shots > 0;

  auto run = [&](const EnergyEvaluator& ev, double& e_ref, double& e_min) {
    if (choice == OptimizerChoice::Sweep) {
      const SweepResult s = sweep_and_fit(ev, grid);
      e_ref = s.fit(0.0);
      e_min = s.fit.e_min;
      return;
    }
    OptimizerConfig oc;
    oc.method = choice == OptimizerChoice::Spsa ? OptimizerMethod::Spsa : OptimizerMethod::NelderMead;
    oc.max_evals = cfg.max_evals;
    oc.seed = derive_seed(seed, kSpsaStream);
    const VqeOutcome out = minimize(ev, zeros, oc);
    // The first evaluation is the reference state itself.
    e_ref = out.trace.front().f;
    // A minimum over sampled energies is biased low; re-measure the argmin.
    e_min = stochastic ? ev.evaluate(out.theta, static_cast<std::uint64_t>(out.n_evals)) : out.energy;
    res.converged = res.converged && out.converged;
    res.n_evals += out.n_evals;
  };
  run(raw, res.e_vqe_ref, res.e_vqe);
  run(readout, res.e_vqe_readout_ref, res.e_vqe_readout);

  res.e_rem = rem_apply(res.e_vqe, rem_delta(res.e_vqe_ref, res.e_exact_ref));
  res.e_readout_rem = rem_apply(res.e_vqe_readout, rem_delta(res.e_vqe_readout_ref, res.e_exact_ref));
  res.err_vqe = res.e_vqe - res.e_exact_min;
  res.err_readout = res.e_vqe_readout - res.e_exact_min;
  res.err_rem = res.e_rem - res.e_exact_min;
  res.err_readout_rem = res.e_readout_rem - res.e_exact_min;
  return res;
}

RemReport to_rem_report(const PointResult& p, bool readout) {
  return readout ? make_rem_report(p.e_exact_ref, p.e_vqe_readout_ref, p.e_exact_min, p.e_vqe_readout)
                 : make_rem_report(p.e_exact_ref, p.e_vqe_ref, p.e_exact_min, p.e_vqe);
}

std::vector<double> default_p2_grid() { return {1e-4, 3e-4, 1e-3, 3e-3, 1e-2, kDeviceCzError, 3e-2, 5e-2}; }

CommandOutput cmd_dissociation(const RunConfig& cfg, bool want_svg) {
  cfg.validate();
  const auto problems = resolve_problems(cfg, true);
  if (problems.size() < 2) throw ConfigError("dissociation needs a molecule with at least two geometries");
  const double p1 = cfg.effective_p1();
  const auto points = parallel_map<PointResult>(problems.size(), [&](std::size_t i) {
    return run_point(problems[i], cfg, cfg.p2, p1, derive_seed(cfg.seed, i));
  });
  CommandOutput out;
  write_csv_row(out.text, {"r", "e_exact", "e_vqe", "e_vqe_readout", "e_rem", "e_readout_rem", "err_vqe", "err_rem"});
  for (const auto& p : points) {
    write_csv_row(out.text, {fmt::format("{}", p.r), energy(p.e_exact_min), energy(p.e_vqe), energy(p.e_vqe_readout),
                             energy(p.e_rem), energy(p.e_readout_rem), energy(p.err_vqe), energy(p.err_rem)});
    out.converged = out.converged && p.converged;
  }
  if (want_svg) {
    Series exact{"exact", {}, {}, "#000000"}, vqe{"VQE", {}, {}, "#d62728"}, ro{"VQE + readout", {}, {}, "#ff7f0e"},
        rem{"REM", {}, {}, "#1f77b4"}, rorem{"readout + REM", {}, {}, "#2ca02c"};
    for (const auto& p : points) {
      for (Series* s : {&exact, &vqe, &ro, &rem, &rorem}) s->x.push_back(p.r);
      exact.y.push_back(0.0);
      vqe.y.push_back(p.err_vqe);
      ro.y.push_back(p.err_readout);
      rem.y.push_back(p.err_rem);
      rorem.y.push_back(p.err_readout_rem);
    }
    ChartOptions opts;
    opts.title = fmt::format("{} energy error along dissociation", cfg.molecule.empty() ? "custom" : cfg.molecule);
    opts.x_label = "r (angstrom)";
    opts.y_label = "E - E_exact (hartree)";
    opts.band = kChemicalAccuracy;
    out.svg = render_svg({exact, vqe, ro, rem, rorem}, opts);
  }
  return out;
}

CommandOutput cmd_noise_sweep(const RunConfig& cfg, bool want_svg) {
  cfg.validate();
  if (cfg.backend != BackendKind::Noisy) throw ConfigError("noise-sweep needs --backend noisy");
  if (cfg.p1) throw ConfigError("noise-sweep ties p1 to 0.1 * p2; drop --p1");
  const auto problems = resolve_problems(cfg, false);
  const std::vector<double> grid = cfg.p2_grid.empty() ? default_p2_grid() : cfg.p2_grid;
  const auto points = parallel_map<PointResult>(grid.size(), [&](std::size_t i) {
    return run_point(problems.front(), cfg, grid[i], 0.1 * grid[i], derive_seed(cfg.seed, i));
  });
  CommandOutput out;
  write_csv_row(out.text, {"p2", "err_vqe", "err_readout", "err_rem", "err_readout_rem"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& p = points[i];
    write_csv_row(out.text, {fmt::format("{}", grid[i]), energy(p.err_vqe), energy(p.err_readout), energy(p.err_rem),
                             energy(p.err_readout_rem)});
    out.converged = out.converged && p.converged;
  }
  if (want_svg) {
    Series vqe{"VQE", grid, {}, "#d62728"}, ro{"VQE + readout", grid, {}, "#ff7f0e"}, rem{"REM", grid, {}, "#1f77b4"},
        rorem{"readout + REM", grid, {}, "#2ca02c"};
    for (const auto& p : points) {
      vqe.y.push_back(std::abs(p.err_vqe));
      ro.y.push_back(std::abs(p.err_readout));
      rem.y.push_back(std::abs(p.err_rem));
      rorem.y.push_back(std::abs(p.err_readout_rem));
    }
    ChartOptions opts;
    opts.title = "Absolute error versus two-qubit depolarizing probability";
    opts.x_label = "p2";
    opts.y_label = "|E - E_exact| (hartree)";
    opts.log_x = true;
    opts.log_y = true;
    opts.band = kChemicalAccuracy;
    opts.marker_x = kDeviceCzError;
    out.svg = render_svg({vqe, ro, rem, rorem}, opts);
  }
  return out;
}

CommandOutput cmd_single_point(const RunConfig& cfg) {
  cfg.validate();
  const auto problems = resolve_problems(cfg, false);
  const Problem& problem = problems.front();
  const PointResult p = run_point(problem, cfg, cfg.p2, cfg.effective_p1(), cfg.seed);
  const RemReport rep = to_rem_report(p, cfg.readout_mitigation);
  const CircuitStats stats = circuit_stats(build_ansatz(problem.ansatz));
  CommandOutput out;
  out.converged = p.converged;
  std::string& t = out.text;
  t += fmt::format("system          {}\n", cfg.molecule.empty() ? cfg.hamiltonian_path : cfg.molecule);
  t += fmt::format("r               {}\n", p.r);
  t += fmt::format("ansatz          {} ({} params, {} two-qubit gates, depth {})\n", to_string(problem.ansatz.family),
                   stats.n_params, stats.two_qubit_gates, stats.depth);
  t += fmt::format("reference       |{}>\n", problem.ansatz.hf_bitstring);
  t += fmt::format("e_exact_ref     {}\n", energy(rep.e_exact_ref));
  t += fmt::format("e_vqe_ref       {}\n", energy(rep.e_vqe_ref));
  t += fmt::format("delta           {}\n", energy(rep.delta));
  t += fmt::format("e_exact_min     {}\n", energy(rep.e_exact_min));
  t += fmt::format("e_vqe_min       {}\n", energy(rep.e_vqe_min));
  t += fmt::format("e_rem           {}\n", energy(rep.e_rem));
  t += fmt::format("err_vqe         {}\n", energy(rep.errors.err_vqe));
  t += fmt::format("err_rem         {}\n", energy(rep.errors.err_rem));
  if (!p.converged) t += "warning         optimizer stopped before meeting its tolerance\n";
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(rep));
  j["readout_mitigation"] = cfg.readout_mitigation;
  j["converged"] = p.converged;
  t += j.dump() + "\n";
  return out;
}

CommandOutput cmd_calibrate(const RunConfig& cfg) {
  cfg.validate();
  const int n = resolve_problems(cfg, false).front().hamiltonian.n_qubits();
  ConfusionMatrix truth = ConfusionMatrix::identity(n);
  if (cfg.backend == BackendKind::Noisy) {
    if (auto c = readout_truth(cfg, n)) truth = *c;
  }
  const ConfusionMatrix est = calibrate_confusion(simulated_readout(truth), n, cfg.calibration_shots,
                                                  cfg.calibration_repeats, derive_seed(cfg.seed, kCalibrationStream));
  return {est.to_csv(), {}, true};
}

CommandOutput cmd_dump(const RunConfig& cfg) {
  cfg.validate();
  const auto problems = resolve_problems(cfg, false);
  return {dump_hamiltonian(problems.front().hamiltonian), {}, true};
}

}  // namespace remsim
