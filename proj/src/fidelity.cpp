// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/fidelity.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>

#include "dephase/errors.hpp"
#include "internal/compensated.hpp"

namespace dephase {
namespace {

void check_times(std::span<const double> times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || !std::isfinite(times[i])) {
      throw ValidationError("times must be finite and non-negative");
    }
    if (i > 0 && times[i] < times[i - 1]) throw ValidationError("times must be sorted");
  }
}

}  // namespace

FidelityCurve fidelity_from_histogram(const PairDifferenceHistogram& hist,
                                      std::span<const double> times,
                                      std::span<const DecayKernel> kernels) {
  if (kernels.empty()) throw ValidationError("at least one decay kernel is required");
  for (const auto& k : kernels) k.validate();
  check_times(times);

  const double total = hist.total();
  FidelityCurve curve{std::vector<double>(times.begin(), times.end()),
                      std::vector<double>(times.size())};
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(times.size()); ++i) {
    const double per_spin = pair_exponent_per_spin(times[static_cast<std::size_t>(i)], kernels);
    internal::CompensatedSum radicand;
    radicand.add(hist.diag);
    for (std::size_t j = 1; j < hist.weights.size(); ++j) {
      if (hist.weights[j] == 0.0) continue;
      radicand.add(2.0 * hist.weights[j] * std::exp(-static_cast<double>(j) * per_spin));
    }
    curve.values[static_cast<std::size_t>(i)] = std::sqrt(radicand.value() / total);
  }
  return curve;
}

FidelityCurve fidelity_exact(const SuperposedState& state, std::span<const double> times,
                             std::span<const DecayKernel> kernels) {
  if (kernels.empty()) throw ValidationError("at least one decay kernel is required");
  return fidelity_from_histogram(pair_histogram(state), times, kernels);
}

std::vector<double> linear_time_grid(double t_max, std::size_t points) {
  if (points == 0) throw ValidationError("time grid needs at least one point");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ValidationError("t_max must be >= 0");
  std::vector<double> grid(points, 0.0);
  if (points == 1) return grid;
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

void write_curve_csv(std::ostream& out, const FidelityCurve& curve) {
  out << "t,F\n";
  char buf[80];
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", curve.times[i], curve.values[i]);
    out << buf;
  }
}

}  // namespace dephase
