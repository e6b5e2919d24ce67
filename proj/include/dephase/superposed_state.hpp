// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "dephase/product_state.hpp"

namespace dephase {

using Amplitude = std::complex<double>;

struct Term {
  Amplitude amplitude;
  ProductState basis;
};

/// Largest number of terms any state may carry (2^24).
inline constexpr std::size_t kMaxTerms = std::size_t{1} << 24;

/// Tolerance on sum |d_r|^2 = 1 enforced at construction.
inline constexpr double kNormTolerance = 1e-12;

/**
 * A normalized superposition sum_r d_r |x_r> of distinct product states.
 *
 * Immutable after construction. Terms with zero amplitude are allowed and kept;
 * they carry no population and so never contribute to dephasing.
 */
class SuperposedState {
 public:
  /// Validates: non-empty, equal qubit counts, distinct bases, norm within 1e-12.
  explicit SuperposedState(std::vector<Term> terms);

  /// Rescales the amplitudes to unit norm before validating. Rejects all-zero input.
  static SuperposedState normalized(std::vector<Term> terms);

  int n() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  /// |d_r|^2 in term order.
  std::vector<double> populations() const;

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

/// Multiplies term r by exp(i * phases[r]). Populations are unchanged.
SuperposedState apply_phases(const SuperposedState& state, std::span<const double> phases);

/// Permutes qubit positions: qubit j of every basis moves to position perm[j].
SuperposedState permute_qubits(const SuperposedState& state, std::span<const int> perm);

}  // namespace dephase
