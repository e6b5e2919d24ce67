// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <set>

#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"
#include "dephase/histogram.hpp"
#include "dephase/scaling.hpp"
#include "dephase/state_io.hpp"
#include "dephase/states.hpp"

namespace dephase::experiments {
namespace {

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
    return buf;
  }
  return v.dump();
}

nlohmann::json ratio_json(const std::optional<double>& r) {
  return r ? nlohmann::json(*r) : nlohmann::json("no_decoherence");
}

// One row per ensemble cell in kEnsembleCsvHeader order; JSON keeps the samples.
Report ensemble_report(const std::vector<EnsembleSpec>& specs) {
  Report report;
  report.columns = {"n", "k", "case", "reference", "max_abs_dev", "mean", "std", "count", "seed"};
  report.document = nlohmann::json::array();
  for (const auto& spec : specs) {
    const auto stats = deviation_stats(spec);
    const auto doc = ensemble_to_json(spec, stats);
    nlohmann::json row = doc["summary"];
    if (!row.contains("k")) row["k"] = nullptr;
    row.erase("family");
    report.rows.push_back(row);
    report.document.push_back(doc);
  }
  return report;
}

void check_range(const IntRange& r) {
  if (r.lo < 1 || r.hi < r.lo) throw ValidationError("n range must satisfy 1 <= A <= B");
}

void check_count(std::size_t count) {
  if (count < 1) throw ValidationError("--count must be >= 1");
}

std::optional<double> closed_form_for(const std::string& family, int n, int k, double nu) {
  if (family == "ghz") return closed_form_ratio(CaseB{n, n, 1.0 / std::sqrt(2.0)}, nu).ratio;
  if (family == "two") return closed_form_ratio(CaseB{n, k, 1.0 / std::sqrt(2.0)}, nu).ratio;
  if (family == "w") return closed_form_ratio(CaseD{n, k}, nu).ratio;
  if (family == "ladder") {
    if (n < 2) return std::nullopt;
    return closed_form_ratio(CaseE{n}, nu).ratio;
  }
  if (family == "full") return closed_form_ratio(CaseF{n}, nu).ratio;
  return std::nullopt;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw ValidationError("--format must be csv or json, got '" + text + "'");
}

void write_report(std::ostream& out, const Report& report, Format format) {
  if (format == Format::kJson) {
    out << (report.document.is_null() ? report.rows : report.document).dump(2) << '\n';
    return;
  }
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    out << (c ? "," : "") << report.columns[c];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      const auto it = row.find(report.columns[c]);
      out << (c ? "," : "") << (it == row.end() ? "" : csv_cell(*it));
    }
    out << '\n';
  }
}

IntRange parse_range(const std::string& text) {
  IntRange r{};
  try {
    const auto colon = text.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw ValidationError("");
    } else {
      const std::string a = text.substr(0, colon);
      const std::string b = text.substr(colon + 1);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw ValidationError("");
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw ValidationError("");
    }
  } catch (const std::exception&) {
    throw ValidationError("range must look like A:B, got '" + text + "'");
  }
  if (r.hi < r.lo) throw ValidationError("range " + text + " is empty");
  return r;
}

Report figure2(const Figure2Options& opts) {
  check_range(opts.n);
  check_count(opts.count);
  if (opts.k.empty()) throw ValidationError("figure2 needs at least one k");
  const std::set<int> ks(opts.k.begin(), opts.k.end());
  std::vector<EnsembleSpec> specs;
  for (int n = opts.n.lo; n <= opts.n.hi; ++n) {
    for (int k : ks) {
      if (k < 1 || k > n - 1) {
        throw ValidationError("figure2: k=" + std::to_string(k) + " outside 1..n-1 for n=" +
                              std::to_string(n));
      }
      specs.push_back({EnsembleFamily::kRandomInManifold, n, k, opts.count, opts.seed});
    }
  }
  for (const auto& s : specs) s.validate();
  return ensemble_report(specs);
}

Report figure3(const Figure3Options& opts) {
  check_range(opts.n);
  check_count(opts.count);
  if (opts.variant != 'a' && opts.variant != 'b') {
    throw ValidationError("figure3 variant must be a or b");
  }
  if (opts.n.lo < 2) throw ValidationError("figure3 needs n >= 2");
  const auto family = opts.variant == 'a' ? EnsembleFamily::kRandomCrossManifold
                                          : EnsembleFamily::kLadderRandomWeights;
  std::vector<EnsembleSpec> specs;
  for (int n = opts.n.lo; n <= opts.n.hi; ++n) {
    specs.push_back({family, n, 0, opts.count, opts.seed,
                     opts.equal_weights ? WeightLaw::kEqual : WeightLaw::kComplexGaussian});
  }
  return ensemble_report(specs);
}

Report figure4(const Figure4Options& opts) {
  check_range(opts.n);
  check_count(opts.count);
  if (opts.n.hi > kFigure4MaxQubits) {
    throw CapacityError("figure4 is limited to n <= 12, got " + std::to_string(opts.n.hi));
  }
  std::vector<EnsembleSpec> specs;
  for (int n = opts.n.lo; n <= opts.n.hi; ++n) {
    specs.push_back({EnsembleFamily::kFullBasisRandomWeights, n, 0, opts.count, opts.seed});
  }
  return ensemble_report(specs);
}

Report table1(const Table1Options& opts) {
  const int n = opts.n;
  const int k = opts.k;
  if (n < 2 || n > kMaxQubits) throw ValidationError("table1 needs 2 <= n <= 63");
  if (k < 1 || k > n) throw ValidationError("table1 needs 1 <= k <= n");
  if (opts.nus.empty()) throw ValidationError("table1 needs at least one nu");
  const double half = 1.0 / std::sqrt(2.0);

  struct Row {
    std::string label;
    std::optional<int> k;
    double script_b;
    std::function<std::optional<double>(double)> closed;
  };
  // Full superposition beyond the enumeration bound uses the binomial histogram.
  const double full_b = n <= kMaxFullSuperpositionQubits
                            ? script_b_polarization(make_full_superposition(n))
                            : script_b(pair_histogram_closed_form(FullCase{n}));
  const double manifold_b = binomial(n, k) <= kMaxTerms
                                ? script_b_polarization(make_w_generalized(n, k))
                                : script_b(pair_histogram_closed_form(ManifoldCase{n, k}));
  const std::vector<Row> rows = {
      {"A", std::nullopt, script_b_polarization(SuperposedState({{1.0, ProductState::all_up(n)}})),
       [](double) { return std::optional<double>(); }},
      {"B_ghz", n, script_b_polarization(make_ghz(n)),
       [&](double nu) { return closed_form_ratio(CaseB{n, n, half}, nu).ratio; }},
      {"B", k, script_b_polarization(make_two_state(n, k, half, half)),
       [&](double nu) { return closed_form_ratio(CaseB{n, k, half}, nu).ratio; }},
      {"C", 1, script_b_polarization(make_w_generalized(n, 1)),
       [&](double nu) { return std::optional<double>(case_c_bounds(n, nu).lower); }},
      {"D", k, manifold_b, [&](double nu) { return closed_form_ratio(CaseD{n, k}, nu).ratio; }},
      {"E", std::nullopt, script_b_polarization(make_ladder(n)),
       [&](double nu) { return closed_form_ratio(CaseE{n}, nu).ratio; }},
      {"F", std::nullopt, full_b,
       [&](double nu) { return closed_form_ratio(CaseF{n}, nu).ratio; }},
  };

  Report report;
  report.columns = {"case", "n", "k", "nu", "ratio", "closed_form", "method"};
  for (const auto& row : rows) {
    for (double nu : opts.nus) {
      if (!(nu > 0.0)) throw ValidationError("nu must be > 0");
      report.rows.push_back({{"case", row.label},
                             {"n", n},
                             {"k", row.k ? nlohmann::json(*row.k) : nlohmann::json()},
                             {"nu", nu},
                             {"ratio", ratio_json(ratio_from_script_b(row.script_b, nu))},
                             {"closed_form", ratio_json(row.closed(nu))},
                             {"method", to_string(ScalingMethod::kAnalyticB)}});
    }
  }
  return report;
}

SuperposedState build_state(const std::string& family, int n, int k) {
  if (family.rfind("file:", 0) == 0) {
    std::ifstream in(family.substr(5));
    if (!in) throw ValidationError("cannot open state file " + family.substr(5));
    return read_state(in);
  }
  if (family == "ghz") return make_ghz(n);
  if (family == "w") return make_w_generalized(n, k);
  if (family == "ladder") return make_ladder(n);
  if (family == "full") return make_full_superposition(n);
  if (family == "two") return make_two_state(n, k, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  if (family == "product") {
    if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count must be in [1, 63]");
    return SuperposedState({{1.0, ProductState::all_up(n)}});
  }
  throw ValidationError("unknown state family '" + family + "'");
}

double reference_time(const SuperposedState& state, std::span<const DecayKernel> kernels,
                      double level) {
  if (kernels.empty()) throw ValidationError("at least one decay kernel is required");
  if (!(level > 0.0 && level < 1.0)) throw ValidationError("level must be in (0, 1)");
  const double half_b = 0.5 * script_b_polarization(state);
  const double target = -std::log(level);
  auto exponent = [&](double t) {
    double s = 0.0;
    for (const auto& k : kernels) s += half_b * std::pow(t / k.t_single, k.nu);
    return s;
  };
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& k : kernels) {
    k.validate();
    hi = std::max(hi, k.t_single);
  }
  if (half_b == 0.0) return std::numeric_limits<double>::infinity();
  while (exponent(hi) < target) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (exponent(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> default_time_grid(const SuperposedState& state,
                                      std::span<const DecayKernel> kernels, std::size_t points) {
  double t_end = reference_time(state, kernels, kDefaultGridFloor);
  if (!std::isfinite(t_end)) {
    t_end = 0.0;
    for (const auto& k : kernels) t_end = std::max(t_end, k.t_single);
  }
  return linear_time_grid(t_end, points);
}

DecayKernel parse_kernel(const std::string& text) {
  DecayKernel k;
  try {
    const auto colon = text.find(':');
    std::size_t used = 0;
    const std::string nu = text.substr(0, colon);
    k.nu = std::stod(nu, &used);
    if (used != nu.size()) throw ValidationError("");
    if (colon != std::string::npos) {
      const std::string t = text.substr(colon + 1);
      k.t_single = std::stod(t, &used);
      if (used != t.size()) throw ValidationError("");
    }
  } catch (const std::exception&) {
    throw ValidationError("kernel must look like nu:T, got '" + text + "'");
  }
  k.validate();
  return k;
}

FidelityCurve curve(const CurveOptions& opts) {
  if (opts.kernels.empty()) throw ValidationError("at least one kernel is required");
  if (opts.points == 0) throw ValidationError("time grid needs at least one point");
  const auto state = build_state(opts.state, opts.n, opts.k);
  const auto times = opts.t_max ? linear_time_grid(*opts.t_max, opts.points)
                                : default_time_grid(state, opts.kernels, opts.points);
  return fidelity_exact(state, times, opts.kernels);
}

Report curve_report(const FidelityCurve& c) {
  Report report;
  report.columns = {"t", "F"};
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    report.rows.push_back({{"t", c.times[i]}, {"F", c.values[i]}});
  }
  return report;
}

Report sweep(const SweepOptions& opts) {
  check_range(opts.n);
  if (opts.nus.empty()) throw ValidationError("sweep needs at least one nu");
  Report report;
  report.columns = {"family", "n", "k", "nu", "analytic", "fit", "closed_form"};
  const bool uses_k = opts.family == "w" || opts.family == "two";
  for (int n = opts.n.lo; n <= opts.n.hi; ++n) {
    const auto state = build_state(opts.family, n, opts.k);
    for (double nu : opts.nus) {
      const DecayKernel kernel{nu, 1.0};
      kernel.validate();
      const auto analytic = ratio_analytic(state, kernel);
      const auto times = default_time_grid(state, std::span<const DecayKernel>(&kernel, 1));
      const auto fitted =
          ratio_fit(fidelity_exact(state, times, std::span<const DecayKernel>(&kernel, 1)), nu,
                    kernel.t_single);
      report.rows.push_back(
          {{"family", opts.family},
           {"n", n},
           {"k", uses_k ? nlohmann::json(opts.k) : nlohmann::json()},
           {"nu", nu},
           {"analytic", ratio_json(analytic.ratio)},
           {"fit", ratio_json(fitted.ratio)},
           {"closed_form", ratio_json(closed_form_for(opts.family, n, opts.k, nu))}});
    }
  }
  return report;
}

}  // namespace dephase::experiments
