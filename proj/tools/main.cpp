// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qdiscrim/error.hpp"
#include "qdiscrim/io.hpp"

namespace {

using namespace qdiscrim;
using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotStandardShape:
    case ErrorKind::DegenerateOverlap:
    case ErrorKind::ClosedFormNotApplicable:
    case ErrorKind::Pi0NotPsd:
    case ErrorKind::InfeasibleMeasurement:
      return 3;
    case ErrorKind::NotConverged:
      return 4;
    default:
      return 2;
  }
}

// --seed wins, then DISCRIM_SEED, then 1
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& cli_seed) {
  if (cli_seed) return *cli_seed;
  const char* env = std::getenv("DISCRIM_SEED");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw Error(ErrorKind::BadFile, std::string("DISCRIM_SEED is not an integer: ") + env);
  }
  return v;
}

std::string interval_text(double lo, double hi) {
  std::string s = "[" + std::to_string(lo) + ", ";
  s += std::isfinite(hi) ? std::to_string(hi) : std::string("inf");
  return s + ")";
}

int cmd_validate(const std::string& path) {
  const InstanceFile file = load_instance_file(path);
  const DiscriminationInstance inst = realize(file);
  std::cout << "rho1: dim " << inst.rho1.dim << ", rank " << inst.rho1.rank << "\n";
  std::cout << "rho2: dim " << inst.rho2.dim << ", rank " << inst.rho2.rank << "\n";
  std::cout << "priors: eta1 " << inst.eta1 << ", eta2 " << inst.eta2 << "\n";
  std::cout << "joint dimension: " << inst.joint_dim << "\n";
  if (inst.standard_shape) {
    std::cout << "standard shape: yes, d=" << inst.d << "\n";
  } else {
    std::cout << "standard shape: no\n";
  }
  return 0;
}

int cmd_canonical(const std::string& path) {
  const DiscriminationInstance inst = realize(load_instance_file(path));
  const CanonicalFrame frame = build_frame(inst);
  std::cout << frame_to_json(frame).dump(2) << "\n";
  return 0;
}

int cmd_solve(const std::string& path, bool as_json, bool oracle_check) {
  const DiscriminationInstance inst = realize(load_instance_file(path));
  SolveOptions opts;
  const SolveReport rep = solve(inst, opts);

  std::optional<OracleResult> check;
  if (oracle_check) {
    OracleConfig cfg = opts.oracle;
    cfg.seed = 9001;
    check = optimize(inst, cfg);
  }

  if (as_json) {
    json j = report_to_json(rep);
    if (check) {
      j["oracle_check"] = {{"q", check->q_num},
                           {"gap", rep.q_opt - check->q_num},
                           {"converged", check->converged}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Q_opt = " << rep.q_opt << "\n";
    std::cout << "fidelity = " << rep.fidelity << "\n";
    std::cout << "bound = " << rep.bound << "\n";
    std::cout << "saturated = " << (rep.saturated ? "yes" : "no") << "\n";
    std::cout << "region_index = " << rep.region_index << "\n";
    std::cout << "method = " << (rep.method == SolveMethod::ClosedForm ? "closed_form" : "numerical")
              << "\n";
    std::cout << "necessary_interval = " << interval_text(rep.necessary_lo, rep.necessary_hi)
              << "\n";
    std::cout << "achieved_interval = " << interval_text(rep.achieved_lo, rep.achieved_hi) << "\n";
    if (rep.oracle_checked) {
      std::cout << "referee_gap = " << rep.oracle_gap << "\n";
    }
    if (check) {
      std::cout << "oracle_q = " << check->q_num << "\n";
      std::cout << "oracle_gap = " << rep.q_opt - check->q_num << "\n";
    }
  }

  if (check && !check->converged) return 4;
  if (rep.method == SolveMethod::Numerical && !rep.oracle_converged) return 4;
  return 0;
}

int cmd_sweep(const std::string& path, int points, const std::string& out_path, bool parallel) {
  const DiscriminationInstance inst = realize(load_instance_file(path));
  const CanonicalFrame frame = build_frame(inst);
  double c_min = 0.0;
  for (double c : frame.overlaps) {
    if (c > 1e-12) {
      c_min = c;
      break;  // overlaps ascend, the first positive one is the smallest
    }
  }
  if (c_min == 0.0) {
    throw Error(ErrorKind::DegenerateOverlap,
                "all canonical overlaps vanish; the states are orthogonal and the sweep range "
                "is empty");
  }
  const RegimeWindows windows = regime_windows(frame);

  const double lo = c_min / 2.0;
  const double hi = 2.0 / c_min;
  const int n = points < 2 ? 2 : points;
  std::vector<double> ratios(n);
  for (int k = 0; k < n; ++k) {
    ratios[k] = lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1));
  }

  struct Row {
    double ratio;
    double q;
    int region;
  };
  std::vector<Row> rows(n);
  auto compute = [&](int k) {
    const double ratio = ratios[k];
    const double eta1 = 1.0 / (1.0 + ratio * ratio);
    const DiscriminationInstance point = make_instance(inst.rho1, inst.rho2, eta1);
    SolveOptions opts;
    opts.oracle.restarts = 3;
    const SolveReport rep = solve(point, opts);
    rows[k] = {ratio, rep.q_opt, rep.region_index};
  };
  if (parallel) {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int k = static_cast<int>(w); k < n; k += static_cast<int>(workers)) compute(k);
      });
    }
    for (std::thread& t : pool) t.join();
  } else {
    for (int k = 0; k < n; ++k) compute(k);
  }

  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw Error(ErrorKind::BadFile, "cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file_out;
  out << "sqrt_eta_ratio,Q_opt,region_index\n";
  out.precision(12);
  for (std::size_t i = 0; i < windows.lo.size(); ++i) {
    out << "# boundary direction=" << i + 1 << " lo=" << windows.lo[i];
    if (std::isfinite(windows.hi[i])) {
      out << " hi=" << windows.hi[i];
    } else {
      out << " hi=inf";
    }
    out << "\n";
  }
  for (const Row& row : rows) {
    out << row.ratio << "," << row.q << "," << row.region << "\n";
  }
  return 0;
}

int cmd_sample(const std::string& path, std::uint64_t trials,
               const std::optional<std::uint64_t>& cli_seed, bool as_json) {
  const std::uint64_t seed = resolve_seed(cli_seed);
  const DiscriminationInstance inst = realize(load_instance_file(path));
  const SolveReport rep = solve(inst);
  const SampleReport sr = sample(inst, rep.measurement, trials, seed);
  if (as_json) {
    std::cout << sample_to_json(sr, seed).dump(2) << "\n";
  } else {
    std::cout << "trials = " << sr.trials << ", seed = " << seed << "\n";
    std::cout << "counts (outcome x prepared):\n";
    const char* names[3] = {"inconclusive", "detect 1", "detect 2"};
    for (int o = 0; o < 3; ++o) {
      std::cout << "  " << names[o] << ": " << sr.counts[o][0] << " " << sr.counts[o][1] << "\n";
    }
    std::cout << "empirical failure = " << sr.empirical_failure << "\n";
    std::cout << "analytic failure = " << sr.analytic_failure << "\n";
    std::cout << "conclusive errors = " << sr.empirical_error << "\n";
    std::cout << "within five sigma = " << (sr.within_five_sigma ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_gen(std::size_t d, const std::optional<std::uint64_t>& cli_seed,
            const std::string& out_path) {
  const std::uint64_t seed = resolve_seed(cli_seed);
  InstanceFile file;
  file.has_similar = true;
  file.similar = random_spec(d, seed);
  const json j = instance_to_json(file);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorKind::BadFile, "cannot write " + out_path);
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal unambiguous discrimination of two equal-rank mixed states"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  bool oracle_check = false;
  int points = 41;
  std::string out_path;
  bool parallel = false;
  std::uint64_t trials = 100000;
  std::optional<std::uint64_t> seed;
  std::size_t gen_d = 2;

  CLI::App* validate = app.add_subcommand("validate", "check an instance file and print shape facts");
  validate->add_option("path", path, "instance JSON file")->required();

  CLI::App* canonical = app.add_subcommand("canonical", "emit the canonical frame as JSON");
  canonical->add_option("path", path, "instance JSON file")->required();

  CLI::App* solve_cmd = app.add_subcommand("solve", "compute the optimal measurement");
  solve_cmd->add_option("path", path, "instance JSON file")->required();
  solve_cmd->add_flag("--json", as_json, "emit the full report as JSON");
  solve_cmd->add_flag("--oracle-check", oracle_check, "also run the numerical oracle and print the gap");

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate Q over the prior-ratio range as CSV");
  sweep->add_option("path", path, "instance JSON file")->required();
  sweep->add_option("--points", points, "number of log-spaced ratio points")->default_val(41);
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep->add_flag("--parallel", parallel, "solve sweep points concurrently");

  CLI::App* sample_cmd = app.add_subcommand("sample", "Monte Carlo check of the optimal measurement");
  sample_cmd->add_option("path", path, "instance JSON file")->required();
  sample_cmd->add_option("--trials", trials, "number of trials")->default_val(100000);
  sample_cmd->add_option("--seed", seed, "RNG seed (falls back to DISCRIM_SEED, then 1)");
  sample_cmd->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* gen = app.add_subcommand("gen", "write a random similar-class instance file");
  gen->add_option("--d", gen_d, "common rank")->default_val(2);
  gen->add_option("--seed", seed, "RNG seed (falls back to DISCRIM_SEED, then 1)");
  gen->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (canonical->parsed()) return cmd_canonical(path);
    if (solve_cmd->parsed()) return cmd_solve(path, as_json, oracle_check);
    if (sweep->parsed()) return cmd_sweep(path, points, out_path, parallel);
    if (sample_cmd->parsed()) return cmd_sample(path, trials, seed, as_json);
    if (gen->parsed()) return cmd_gen(gen_d, seed, out_path);
  } catch (const qdiscrim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
