// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dephase/scaling.hpp"
#include "dephase/superposed_state.hpp"

namespace dephase {

enum class EnsembleFamily {
  kRandomInManifold,        // all C(n,k) bases of manifold k, random amplitudes
  kRandomCrossManifold,     // one random basis per manifold 1..n, random amplitudes
  kLadderRandomWeights,     // ladder bases, random amplitudes
  kFullBasisRandomWeights,  // all 2^n bases, random amplitudes
};

enum class WeightLaw {
  kComplexGaussian,  // i.i.d. standard complex normals, then normalized
  kEqual,            // every amplitude 1/sqrt(m); bases still sampled
};

std::string to_string(EnsembleFamily family);

struct EnsembleSpec {
  EnsembleFamily family = EnsembleFamily::kRandomInManifold;
  int n = 2;
  int k = 1;  // only read by kRandomInManifold
  std::size_t count = 100;
  std::uint64_t seed = 0;
  WeightLaw weights = WeightLaw::kComplexGaussian;

  void validate() const;
};

/// Deterministic in (spec.seed, index); index must be < spec.count.
SuperposedState sample_state(const EnsembleSpec& spec, std::size_t index);

/// Closed-form ratio the family is compared against: D(n,k), E(n) or F(n).
ScalingResult ensemble_reference(const EnsembleSpec& spec, double nu = 2.0);

struct DeviationStats {
  double reference = 0.0;
  double max_abs_dev = 0.0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for count = 1
  std::size_t count = 0;
  std::vector<double> samples;  // ratio per index
};

/**
 * ratio_analytic over `count` samples versus the family's closed form.
 * Samples are evaluated in parallel and reduced in index order, so the result
 * is bit-identical for any thread count.
 */
DeviationStats deviation_stats(const EnsembleSpec& spec, double nu = 2.0);

/// {"samples": [{index, ratio}], "summary": {...}}
nlohmann::json ensemble_to_json(const EnsembleSpec& spec, const DeviationStats& stats);

inline constexpr const char* kEnsembleCsvHeader = "n,k,case,reference,max_abs_dev,mean,std,count,seed";
/// One CSV row matching kEnsembleCsvHeader (no trailing newline).
std::string ensemble_csv_row(const EnsembleSpec& spec, const DeviationStats& stats);

}  // namespace dephase
