// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "dephase/fidelity.hpp"
#include "dephase/histogram.hpp"
#include "dephase/kernel.hpp"
#include "dephase/superposed_state.hpp"

// Straight-line single-threaded versions of the parallel kernels. Kept for
// tests and the benchmark; not used on any production path.
namespace dephase::serial {

/// Plain double loop over all unordered pairs, no blocking or compensation.
PairDifferenceHistogram pair_histogram(const SuperposedState& state);

FidelityCurve fidelity_exact(const SuperposedState& state, std::span<const double> times,
                             std::span<const DecayKernel> kernels);

}  // namespace dephase::serial
