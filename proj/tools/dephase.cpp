// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

// dephase: experiment runner for collective dephasing of decoupled spin qubits.
//
//   dephase figure2|figure3|figure4|table1|curve|sweep [flags]
//
// Flags may also come from `--config FILE` (key=value lines, keys are flag
// names without dashes). Precedence: command line, then config file, then the
// DEPHASE_SEED environment variable for --seed.
//
// Exit codes: 0 success, 2 validation error, 3 capacity error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dephase/errors.hpp"
#include "dephase/experiments.hpp"

namespace {

namespace ex = dephase::experiments;

constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

struct CommonFlags {
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = ex::kDefaultSeed;
  std::size_t count = 100;
  std::string n_range;
  int n = 0;
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dephase::ValidationError("cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw dephase::ValidationError("config line " + std::to_string(line_no) +
                                     ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

// Fills options the command line left unset.
void apply_fallback(CLI::App* sub, const std::string& key, const std::string& value) {
  CLI::Option* opt = nullptr;
  try {
    opt = sub->get_option("--" + key);
  } catch (const CLI::OptionNotFound&) {
    throw dephase::ValidationError("unknown config key '" + key + "' for " + sub->get_name());
  }
  if (opt->count() > 0) return;
  if (opt->get_expected_max() > 1) {
    // Vector options take a comma-separated list.
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) opt->add_result(item);
  } else {
    opt->add_result(value);
  }
  opt->run_callback();
}

void add_output_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--out", f.out, "Output path (default stdout)");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_ensemble_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--count", f.count, "Samples per cell");
  sub->add_option("--seed", f.seed, "RNG seed (env DEPHASE_SEED)");
  sub->add_option("--n-range", f.n_range, "Qubit range A:B");
  sub->add_option("--n", f.n, "Single qubit count (shorthand for --n-range N:N)");
}

ex::IntRange resolve_range(const CommonFlags& f, ex::IntRange fallback) {
  if (!f.n_range.empty()) return ex::parse_range(f.n_range);
  if (f.n > 0) return {f.n, f.n};
  return fallback;
}

void emit(const ex::Report& report, const CommonFlags& f) {
  const auto format = ex::parse_format(f.format);
  if (f.out.empty()) {
    ex::write_report(std::cout, report, format);
    return;
  }
  std::ofstream file(f.out);
  if (!file) throw dephase::ValidationError("cannot write " + f.out);
  ex::write_report(file, report, format);
}

int run(int argc, char** argv) {
  CLI::App app{"Collective dephasing of decoupled spin qubits"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; command-line flags take precedence");

  CommonFlags f;

  auto* fig2 = app.add_subcommand("figure2", "Random in-manifold states vs the W-manifold law");
  std::vector<int> fig2_k{2, 3, 4};
  add_output_flags(fig2, f);
  add_ensemble_flags(fig2, f);
  fig2->add_option("--k", fig2_k, "Manifold indices")->delimiter(',');

  auto* fig3 = app.add_subcommand("figure3", "Cross-manifold states vs the ladder law");
  char variant = 'a';
  bool equal_weights = false;
  add_output_flags(fig3, f);
  add_ensemble_flags(fig3, f);
  fig3->add_option("--variant", variant, "a: random bases, b: ladder bases")
      ->check(CLI::IsMember({'a', 'b'}));
  fig3->add_flag("--equal-weights", equal_weights, "Use equal amplitudes instead of random ones");

  auto* fig4 = app.add_subcommand("figure4", "Random states over the whole basis vs 1/sqrt(n)");
  add_output_flags(fig4, f);
  add_ensemble_flags(fig4, f);

  auto* tab1 = app.add_subcommand("table1", "Scaling ratios per state class and decay exponent");
  ex::Table1Options t1;
  add_output_flags(tab1, f);
  tab1->add_option("--n", t1.n, "Qubit count");
  tab1->add_option("--k", t1.k, "Manifold index for classes B and D");
  tab1->add_option("--nu", t1.nus, "Decay exponents")->delimiter(',');

  auto* crv = app.add_subcommand("curve", "Exact fidelity curve F(t) as CSV");
  ex::CurveOptions co;
  std::vector<std::string> kernel_specs;
  double curve_nu = 0.0;
  double t_max = -1.0;
  add_output_flags(crv, f);
  crv->add_option("--state", co.state, "ghz|w|ladder|full|two|product|file:PATH");
  crv->add_option("--n", co.n, "Qubit count");
  crv->add_option("--k", co.k, "Manifold index (w, two)");
  crv->add_option("--kernel", kernel_specs, "Decay channel nu:T (repeatable)");
  crv->add_option("--nu", curve_nu, "Single channel with this nu and T = 1");
  crv->add_option("--t-max", t_max, "End of the time grid (default: reference F = 0.8)");
  crv->add_option("--points", co.points, "Grid points");

  auto* swp = app.add_subcommand("sweep", "Analytic vs fitted vs closed-form ratios across n");
  ex::SweepOptions so;
  add_output_flags(swp, f);
  swp->add_option("--family", so.family, "ghz|w|ladder|full|two|product");
  swp->add_option("--n-range", f.n_range, "Qubit range A:B");
  swp->add_option("--n", f.n, "Single qubit count");
  swp->add_option("--k", so.k, "Manifold index (w, two)");
  swp->add_option("--nu", so.nus, "Decay exponents")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (!config_path.empty()) {
    for (const auto& [key, value] : read_config(config_path)) apply_fallback(sub, key, value);
  }
  if (const char* env = std::getenv("DEPHASE_SEED"); env != nullptr && *env != '\0') {
    if (auto* seed = sub->get_option_no_throw("--seed"); seed != nullptr && seed->count() == 0) {
      seed->add_result(env);
      seed->run_callback();
    }
  }

  if (sub == fig2) {
    emit(ex::figure2({resolve_range(f, {7, 20}), fig2_k, f.count, f.seed}), f);
  } else if (sub == fig3) {
    emit(ex::figure3({variant, resolve_range(f, {7, 20}), f.count, f.seed, equal_weights}), f);
  } else if (sub == fig4) {
    emit(ex::figure4({resolve_range(f, {2, 12}), f.count, f.seed}), f);
  } else if (sub == tab1) {
    emit(ex::table1(t1), f);
  } else if (sub == crv) {
    if (!kernel_specs.empty()) {
      co.kernels.clear();
      for (const auto& s : kernel_specs) co.kernels.push_back(ex::parse_kernel(s));
    } else if (crv->count("--nu") > 0) {
      co.kernels = {dephase::DecayKernel{curve_nu, 1.0}};
    }
    if (crv->count("--t-max") > 0) co.t_max = t_max;
    emit(ex::curve_report(ex::curve(co)), f);
  } else if (sub == swp) {
    so.n = resolve_range(f, so.n);
    emit(ex::sweep(so), f);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dephase::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const dephase::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
