// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>
#include <vector>

#include "dephase/superposed_state.hpp"

namespace dephase {

/**
 * Pair statistics of a state, bucketed by Hamming distance.
 *
 * weights[j] = sum over unordered basis pairs at distance j of |d_k|^2 |d_r|^2
 * (weights[0] is always 0 since bases are distinct), diag = sum_r |d_r|^4.
 * For a normalized state diag + 2 sum_j weights[j] = 1.
 */
struct PairDifferenceHistogram {
  int n = 0;
  double diag = 1.0;
  std::vector<double> weights;

  double weight(int j) const {
    return j >= 0 && j < static_cast<int>(weights.size()) ? weights[static_cast<std::size_t>(j)]
                                                            : 0.0;
  }
  /// diag + 2 sum_j weights[j].
  double total() const;
};

enum class HistogramBackend {
  kAuto,       // Transform for dense states with n <= 24, enumeration otherwise.
  kEnumerate,  // O(m^2) popcount over all pairs, parallel over row blocks.
  kTransform,  // XOR autocorrelation through a Walsh-Hadamard transform, O(n 2^n).
};

/// Exact pair histogram. Results are independent of the OpenMP thread count.
PairDifferenceHistogram pair_histogram(const SuperposedState& state,
                                       HistogramBackend backend = HistogramBackend::kAuto);

/// Equal-weight superposition over the k-th manifold (valid for any n <= 63).
struct ManifoldCase {
  int n;
  int k;
};
/// Equal-weight superposition over all 2^n bases.
struct FullCase {
  int n;
};
using ClosedFormHistogramCase = std::variant<ManifoldCase, FullCase>;

/**
 * Histogram from binomial counts, no enumeration.
 *
 * Manifold: each basis has C(n-k, j) C(k, j) partners at distance 2j, so
 * weights[2j] = C(n-k, j) C(k, j) / (2 C(n, k)). Full: each basis has C(n, j)
 * partners at distance j, so weights[j] = C(n, j) / 2^(n+1).
 */
PairDifferenceHistogram pair_histogram_closed_form(const ClosedFormHistogramCase& c);

/// The population-weighted pair functional 2 sum_{k<r} |d_k d_r|^2 * 4 j_kr = 8 sum_j j w_j.
double script_b(const PairDifferenceHistogram& hist);

/**
 * Same functional in O(m n) without touching pairs.
 *
 * Splitting the pair sum by qubit, sum_{k<r} p_k p_r j_kr = sum_b D_b U_b with
 * D_b (U_b) the total population whose basis has qubit b down (up).
 */
double script_b_polarization(const SuperposedState& state);

}  // namespace dephase
