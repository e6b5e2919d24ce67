// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

#include "dephase/kernel.hpp"
#include "dephase/superposed_state.hpp"

// Verification paths that share nothing with the histogram engine: a
// semiclassical Overhauser-field Monte Carlo and a direct pair loop.
namespace dephase::oracle {

struct McEstimate {
  double value = 0.0;
  double std_err = 0.0;
  std::size_t n_samples = 0;
};

inline constexpr std::size_t kMinShots = 100;

/// Longitudinal field spread per dot: sigma_B = sqrt(2) / T2*(1).
double field_sigma(double t2star);

/// One shot's worth of dot fields B_j^z, i.i.d. N(0, sigma_B^2).
std::vector<double> sample_overhauser_field(int n, double t2star, std::uint64_t seed,
                                            std::uint64_t shot);

/**
 * sqrt(M[<x(0)|x(t)><x(t)|x(0)>]) by direct sampling of the dot fields.
 *
 * Basis x_r picks up phase t sum_j l_j^r B_j^z. The square root is taken after
 * averaging; std_err comes from the delta method. Shots run in fixed blocks
 * with their own Philox streams, merged in block order.
 */
McEstimate mc_fidelity(const SuperposedState& state, double t, std::size_t n_samples,
                       std::uint64_t seed, double t2star = 1.0);

/// M[cos(theta t)] for a pair differing in j spins, theta = sum over those dots of 2 B_j^z.
McEstimate mc_pair_decay(int j, double t, std::size_t n_samples, std::uint64_t seed,
                         double t2star = 1.0);

/// M[exp(-i B^z t)] for one dot, i.e. the single-spin free induction decay exp(-t^2/T2*(1)^2).
McEstimate mc_single_spin_decay(double t, std::size_t n_samples, std::uint64_t seed,
                                double t2star = 1.0);

/// Largest state the pair loop accepts.
inline constexpr std::size_t kBruteForceMaxTerms = std::size_t{1} << 12;

/// sqrt(sum |d|^4 + 2 sum_{i<k} |d_i d_k|^2 M(j_ik, t)) straight from the terms.
double brute_force_fidelity(const SuperposedState& state, double t, const DecayKernel& kernel);
double brute_force_fidelity(const SuperposedState& state, double t,
                            std::span<const DecayKernel> kernels);

/// {t, estimate, std_err, shots}
nlohmann::json to_json(double t, const McEstimate& estimate);

}  // namespace dephase::oracle
