// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "dephase/superposed_state.hpp"

// Constructors for the canonical state classes and Zeeman-manifold helpers.
namespace dephase {

/// Largest n accepted by make_full_superposition (2^24 terms).
inline constexpr int kMaxFullSuperpositionQubits = 24;

/// C(n, k) as an exact integer; 0 when k is outside [0, n].
std::uint64_t binomial(int n, int k);

/// All product states with exactly k down spins, in increasing bit order.
std::vector<ProductState> manifold_bases(int n, int k);

/// (|1...1> + |-...->)/sqrt(2).
SuperposedState make_ghz(int n);

/// Equal-weight, real positive superposition over the whole k-th manifold.
SuperposedState make_w_generalized(int n, int k);

/// One basis per manifold k = 1..n; term r has its lowest r qubits down.
SuperposedState make_ladder(int n);

/// ((|1> + |->)/sqrt(2))^(tensor n): all 2^n bases with amplitude 2^(-n/2).
SuperposedState make_full_superposition(int n);

/// d1 |1...1> + d2 |lowest k qubits down>. Requires |d1|^2 + |d2|^2 = 1.
SuperposedState make_two_state(int n, int k, Amplitude d1, Amplitude d2);

/// The terms of `state` in manifold k, renormalized. Throws if that manifold carries no weight.
SuperposedState restrict_to_manifold(const SuperposedState& state, int k);

}  // namespace dephase
