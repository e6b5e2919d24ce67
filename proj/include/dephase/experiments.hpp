// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dephase/fidelity.hpp"
#include "dephase/kernel.hpp"
#include "dephase/superposed_state.hpp"

// The experiment commands behind the `dephase` CLI. Each returns a Report that
// can be written as CSV or JSON; rows are in a fixed sorted order.
namespace dephase::experiments {

enum class Format { kCsv, kJson };

Format parse_format(const std::string& text);

struct Report {
  std::vector<std::string> columns;
  nlohmann::json rows = nlohmann::json::array();  // objects keyed by column
  nlohmann::json document;                         // JSON form; rows when null
};

void write_report(std::ostream& out, const Report& report, Format format);

struct IntRange {
  int lo;
  int hi;
};

/// "A:B" or a single integer "A". Rejects empty or reversed ranges.
IntRange parse_range(const std::string& text);

inline constexpr std::uint64_t kDefaultSeed = 20140601;
inline constexpr int kFigure4MaxQubits = 12;

struct Figure2Options {
  IntRange n{7, 20};
  std::vector<int> k{2, 3, 4};
  std::size_t count = 100;
  std::uint64_t seed = kDefaultSeed;
};
/// Random in-manifold states vs the generalized W closed form, one row per (n, k).
Report figure2(const Figure2Options& opts);

struct Figure3Options {
  char variant = 'a';  // 'a': random bases per manifold, 'b': ladder bases
  IntRange n{7, 20};
  std::size_t count = 100;
  std::uint64_t seed = kDefaultSeed;
  bool equal_weights = false;
};
/// Cross-manifold states vs the ladder closed form.
Report figure3(const Figure3Options& opts);

struct Figure4Options {
  IntRange n{2, 12};
  std::size_t count = 100;
  std::uint64_t seed = kDefaultSeed;
};
/// Random weights over the whole basis vs 1/sqrt(n). n above 12 is a capacity error.
Report figure4(const Figure4Options& opts);

struct Table1Options {
  int n = 8;
  int k = 2;
  std::vector<double> nus{1.0, 2.0, 4.0, 6.0};
};
/// Engine and closed-form ratios for each state class at every nu.
Report table1(const Table1Options& opts);

/// Named state families for `curve` and `sweep`: ghz, w, ladder, full, two, product,
/// or file:PATH in the state text format.
SuperposedState build_state(const std::string& family, int n, int k);

/// Time where the short-time reference exp{-sum_c (B/2)(t/T_c)^nu_c} reaches `level`.
double reference_time(const SuperposedState& state, std::span<const DecayKernel> kernels,
                      double level);

inline constexpr std::size_t kDefaultGridPoints = 64;
inline constexpr double kDefaultGridFloor = 0.8;

/// 64 points from 0 to the time the reference decays to 0.8 (max T_c if it never decays).
std::vector<double> default_time_grid(const SuperposedState& state,
                                      std::span<const DecayKernel> kernels,
                                      std::size_t points = kDefaultGridPoints);

/// "nu:T" or "nu" (T = 1).
DecayKernel parse_kernel(const std::string& text);

struct CurveOptions {
  std::string state = "ghz";
  int n = 1;
  int k = 1;
  std::vector<DecayKernel> kernels{DecayKernel{}};
  std::optional<double> t_max;
  std::size_t points = kDefaultGridPoints;
};
FidelityCurve curve(const CurveOptions& opts);
Report curve_report(const FidelityCurve& c);

struct SweepOptions {
  std::string family = "ghz";
  IntRange n{2, 12};
  int k = 1;
  std::vector<double> nus{2.0};
};
/// Analytic, fitted and closed-form ratios for one family across n and nu.
Report sweep(const SweepOptions& opts);

}  // namespace dephase::experiments
