// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace dephase {

/**
 * Single-qubit decay law exp{-(t / t_single)^nu}.
 *
 * nu = 2 is Gaussian free induction (T2* or narrowed-state T2), 1 is
 * relaxation-limited, 4 spin echo, 6 two-pulse CPMG.
 */
struct DecayKernel {
  double nu = 2.0;
  double t_single = 1.0;

  /// Throws ValidationError unless nu > 0 and t_single > 0 (both finite).
  void validate() const;
};

/**
 * Ensemble average M[cos(theta t)] for a pair of bases differing in j spins:
 * exp{-4 j (t / t_single)^nu}.
 *
 * At nu = 2 this is exactly the Gaussian pair average with (l^k - l^r)^2 = 4
 * per differing spin. For other nu the exponent stays additive over the
 * differing spins (independent local baths) and one qubit in an equal
 * superposition decays as exp{-(t / t_single)^nu} at short times.
 */
double pair_kernel(int j, double t, const DecayKernel& kernel);

/// Sum over kernels of 4 (t / t_c)^nu_c: the per-spin exponent of the combined kernel.
double pair_exponent_per_spin(double t, std::span<const DecayKernel> kernels);

/// Product of pair_kernel over independent channels, evaluated in one exponential.
double combined_pair_kernel(int j, double t, std::span<const DecayKernel> kernels);

}  // namespace dephase
