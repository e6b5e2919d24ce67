// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/states.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "dephase/errors.hpp"

namespace dephase {
namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("qubit count must be in [1, 63], got " + std::to_string(n));
  }
}

// Next integer with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step.
    result = result / static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n - k + i) +
             result % static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<ProductState> manifold_bases(int n, int k) {
  check_qubits(n);
  if (k < 0 || k > n) {
    throw ValidationError("manifold index k=" + std::to_string(k) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  const std::uint64_t count = binomial(n, k);
  if (count > kMaxTerms) {
    throw CapacityError("manifold C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") exceeds 2^24 bases");
  }
  std::vector<ProductState> out;
  out.reserve(count);
  if (k == 0) {
    out.emplace_back(n, 0);
    return out;
  }
  std::uint64_t v = low_mask(k);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.emplace_back(n, v);
    if (i + 1 < count) v = next_combination(v);
  }
  return out;
}

SuperposedState make_ghz(int n) {
  check_qubits(n);
  const double a = 1.0 / std::sqrt(2.0);
  return SuperposedState({{a, ProductState::all_up(n)}, {a, ProductState::all_down(n)}});
}

SuperposedState make_w_generalized(int n, int k) {
  const auto bases = manifold_bases(n, k);
  const double a = 1.0 / std::sqrt(static_cast<double>(bases.size()));
  std::vector<Term> terms;
  terms.reserve(bases.size());
  for (const auto& b : bases) terms.push_back({a, b});
  return SuperposedState(std::move(terms));
}

SuperposedState make_ladder(int n) {
  check_qubits(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) terms.push_back({a, ProductState(n, low_mask(r))});
  return SuperposedState(std::move(terms));
}

SuperposedState make_full_superposition(int n) {
  check_qubits(n);
  if (n > kMaxFullSuperpositionQubits) {
    throw CapacityError("full superposition limited to n <= 24, got " + std::to_string(n));
  }
  const std::uint64_t m = std::uint64_t{1} << n;
  const double a = std::pow(2.0, -0.5 * n);
  std::vector<Term> terms;
  terms.reserve(m);
  for (std::uint64_t b = 0; b < m; ++b) terms.push_back({a, ProductState(n, b)});
  return SuperposedState(std::move(terms));
}

SuperposedState make_two_state(int n, int k, Amplitude d1, Amplitude d2) {
  check_qubits(n);
  if (k < 1 || k > n) {
    throw ValidationError("two-state: k must be in [1, n], got " + std::to_string(k));
  }
  if (std::abs(std::norm(d1) + std::norm(d2) - 1.0) > kNormTolerance) {
    throw ValidationError("two-state: |d1|^2 + |d2|^2 must equal 1");
  }
  return SuperposedState({{d1, ProductState::all_up(n)}, {d2, ProductState(n, low_mask(k))}});
}

SuperposedState restrict_to_manifold(const SuperposedState& state, int k) {
  std::vector<Term> terms;
  for (const auto& t : state.terms()) {
    if (t.basis.down_count() == k) terms.push_back(t);
  }
  if (terms.empty()) throw ValidationError("state has no terms in manifold " + std::to_string(k));
  return SuperposedState::normalized(std::move(terms));
}

}  // namespace dephase
