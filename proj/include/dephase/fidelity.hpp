// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "dephase/histogram.hpp"
#include "dephase/kernel.hpp"
#include "dephase/superposed_state.hpp"

namespace dephase {

struct FidelityCurve {
  std::vector<double> times;
  std::vector<double> values;
};

/**
 * F(t) = sqrt(sum_r |d_r|^4 + 2 sum_j w_j prod_c M_c(j, t)), where M_c is the
 * pair kernel of channel c. Channels are independent, so their pair averages
 * multiply. The radicand is divided by the histogram total so F(0) = 1 exactly
 * and the large-t floor is sqrt(sum |d_r|^4) exactly.
 *
 * Times must be non-negative and non-decreasing; at least one kernel is required.
 * Evaluation is split across threads by time point.
 */
FidelityCurve fidelity_from_histogram(const PairDifferenceHistogram& hist,
                                      std::span<const double> times,
                                      std::span<const DecayKernel> kernels);

FidelityCurve fidelity_exact(const SuperposedState& state, std::span<const double> times,
                             std::span<const DecayKernel> kernels);

/// `points` evenly spaced times on [0, t_max]. points >= 1; a single point is t = 0.
std::vector<double> linear_time_grid(double t_max, std::size_t points);

/// CSV with header "t,F", full double precision.
void write_curve_csv(std::ostream& out, const FidelityCurve& curve);

}  // namespace dephase
