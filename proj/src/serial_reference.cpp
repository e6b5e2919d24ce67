// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/serial_reference.hpp"

#include <bit>
#include <cmath>

#include "dephase/errors.hpp"

namespace dephase::serial {

PairDifferenceHistogram pair_histogram(const SuperposedState& state) {
  const auto pop = state.populations();
  PairDifferenceHistogram h{state.n(), 0.0,
                            std::vector<double>(static_cast<std::size_t>(state.n()) + 1, 0.0)};
  for (std::size_t i = 0; i < state.size(); ++i) {
    h.diag += pop[i] * pop[i];
    for (std::size_t k = i + 1; k < state.size(); ++k) {
      const int j = std::popcount(state[i].basis.bits() ^ state[k].basis.bits());
      h.weights[static_cast<std::size_t>(j)] += pop[i] * pop[k];
    }
  }
  return h;
}

FidelityCurve fidelity_exact(const SuperposedState& state, std::span<const double> times,
                             std::span<const DecayKernel> kernels) {
  if (kernels.empty()) throw ValidationError("at least one decay kernel is required");
  const auto h = serial::pair_histogram(state);
  double total = h.diag;
  for (double w : h.weights) total += 2.0 * w;
  FidelityCurve curve{std::vector<double>(times.begin(), times.end()), {}};
  for (double t : times) {
    double radicand = h.diag;
    for (std::size_t j = 1; j < h.weights.size(); ++j) {
      radicand += 2.0 * h.weights[j] * combined_pair_kernel(static_cast<int>(j), t, kernels);
    }
    curve.values.push_back(std::sqrt(radicand / total));
  }
  return curve;
}

}  // namespace dephase::serial
