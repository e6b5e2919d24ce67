// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/superposed_state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dephase/errors.hpp"
#include "internal/compensated.hpp"

namespace dephase {
namespace {

double norm_squared(std::span<const Term> terms) {
  internal::CompensatedSum s;
  for (const auto& t : terms) s.add(std::norm(t.amplitude));
  return s.value();
}

}  // namespace

SuperposedState::SuperposedState(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw ValidationError("superposed state needs at least one term");
  if (terms_.size() > kMaxTerms) {
    throw CapacityError("superposed state exceeds 2^24 terms");
  }
  n_ = terms_.front().basis.n();
  std::vector<std::uint64_t> keys;
  keys.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.basis.n() != n_) throw ValidationError("terms have different qubit counts");
    if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag())) {
      throw ValidationError("amplitude is not finite");
    }
    keys.push_back(t.basis.bits());
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw ValidationError("duplicate basis state in superposition");
  }
  const double norm = norm_squared(terms_);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw ValidationError("amplitudes are not normalized (sum |d|^2 = " + std::to_string(norm) +
                          ")");
  }
}

SuperposedState SuperposedState::normalized(std::vector<Term> terms) {
  const double norm = norm_squared(terms);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("cannot normalize a zero or non-finite amplitude vector");
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& t : terms) t.amplitude *= scale;
  return SuperposedState(std::move(terms));
}

std::vector<double> SuperposedState::populations() const {
  std::vector<double> out(terms_.size());
  std::transform(terms_.begin(), terms_.end(), out.begin(),
                 [](const Term& t) { return std::norm(t.amplitude); });
  return out;
}

SuperposedState apply_phases(const SuperposedState& state, std::span<const double> phases) {
  if (phases.size() != state.size()) {
    throw ValidationError("apply_phases: one phase per term required");
  }
  std::vector<Term> terms(state.terms().begin(), state.terms().end());
  for (std::size_t r = 0; r < terms.size(); ++r) {
    // Quarter turns are applied exactly so populations stay bit-identical.
    const double quarters = phases[r] / (M_PI / 2);
    if (quarters == std::round(quarters) && std::abs(quarters) < 1e15) {
      static constexpr Amplitude kTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const auto q = static_cast<long long>(quarters);
      terms[r].amplitude *= kTurns[((q % 4) + 4) % 4];
    } else {
      terms[r].amplitude *= std::polar(1.0, phases[r]);
    }
  }
  return SuperposedState(std::move(terms));
}

SuperposedState permute_qubits(const SuperposedState& state, std::span<const int> perm) {
  const int n = state.n();
  if (static_cast<int>(perm.size()) != n) {
    throw ValidationError("permute_qubits: permutation length must equal qubit count");
  }
  std::vector<int> seen(perm.begin(), perm.end());
  std::sort(seen.begin(), seen.end());
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  if (seen != identity) throw ValidationError("permute_qubits: not a permutation");

  std::vector<Term> terms;
  terms.reserve(state.size());
  for (const auto& t : state.terms()) {
    std::uint64_t bits = 0;
    for (int j = 0; j < n; ++j) {
      if ((t.basis.bits() >> j) & 1U) bits |= std::uint64_t{1} << perm[static_cast<std::size_t>(j)];
    }
    terms.push_back({t.amplitude, ProductState(n, bits)});
  }
  return SuperposedState(std::move(terms));
}

}  // namespace dephase
