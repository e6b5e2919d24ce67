// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/ensembles.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>

#include "dephase/errors.hpp"
#include "dephase/rng.hpp"
#include "dephase/states.hpp"
#include "internal/compensated.hpp"

namespace dephase {
namespace {

std::vector<Term> with_weights(const std::vector<ProductState>& bases, WeightLaw law,
                               Philox4x32& rng) {
  std::vector<Term> terms;
  terms.reserve(bases.size());
  const double equal = 1.0 / std::sqrt(static_cast<double>(bases.size()));
  for (const auto& b : bases) {
    if (law == WeightLaw::kEqual) {
      terms.push_back({equal, b});
    } else {
      const double re = rng.normal();
      const double im = rng.normal();
      terms.push_back({Amplitude(re, im), b});
    }
  }
  return terms;
}

// Uniform k-subset of the n qubit positions by partial Fisher-Yates.
ProductState random_manifold_basis(int n, int k, Philox4x32& rng) {
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 0);
  std::uint64_t bits = 0;
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.bounded(static_cast<std::uint64_t>(n - i));
    std::swap(pos[static_cast<std::size_t>(i)], pos[j]);
    bits |= std::uint64_t{1} << pos[static_cast<std::size_t>(i)];
  }
  return ProductState(n, bits);
}

std::vector<ProductState> bases_of(const SuperposedState& s) {
  std::vector<ProductState> out;
  out.reserve(s.size());
  for (const auto& t : s.terms()) out.push_back(t.basis);
  return out;
}

}  // namespace

std::string to_string(EnsembleFamily family) {
  switch (family) {
    case EnsembleFamily::kRandomInManifold:
      return "random_in_manifold";
    case EnsembleFamily::kRandomCrossManifold:
      return "random_cross_manifold";
    case EnsembleFamily::kLadderRandomWeights:
      return "ladder_random_weights";
    case EnsembleFamily::kFullBasisRandomWeights:
      return "full_basis_random_weights";
  }
  return "unknown";
}

void EnsembleSpec::validate() const {
  if (count < 1) throw ValidationError("ensemble count must be >= 1");
  if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count must be in [1, 63]");
  switch (family) {
    case EnsembleFamily::kRandomInManifold:
      if (k < 1 || k > n - 1) {
        throw ValidationError("in-manifold ensemble needs 1 <= k <= n-1, got k=" +
                              std::to_string(k));
      }
      if (binomial(n, k) > kMaxTerms) throw CapacityError("manifold exceeds 2^24 bases");
      break;
    case EnsembleFamily::kRandomCrossManifold:
    case EnsembleFamily::kLadderRandomWeights:
      if (n < 2) throw ValidationError("cross-manifold ensembles need n >= 2");
      break;
    case EnsembleFamily::kFullBasisRandomWeights:
      if (n > kMaxFullSuperpositionQubits) {
        throw CapacityError("full-basis ensemble limited to n <= 24");
      }
      break;
  }
}

SuperposedState sample_state(const EnsembleSpec& spec, std::size_t index) {
  spec.validate();
  if (index >= spec.count) throw ValidationError("sample index out of range");
  Philox4x32 rng(spec.seed, index);
  std::vector<ProductState> bases;
  switch (spec.family) {
    case EnsembleFamily::kRandomInManifold:
      bases = manifold_bases(spec.n, spec.k);
      break;
    case EnsembleFamily::kRandomCrossManifold:
      for (int k = 1; k <= spec.n; ++k) bases.push_back(random_manifold_basis(spec.n, k, rng));
      break;
    case EnsembleFamily::kLadderRandomWeights:
      bases = bases_of(make_ladder(spec.n));
      break;
    case EnsembleFamily::kFullBasisRandomWeights:
      bases = bases_of(make_full_superposition(spec.n));
      break;
  }
  return SuperposedState::normalized(with_weights(bases, spec.weights, rng));
}

ScalingResult ensemble_reference(const EnsembleSpec& spec, double nu) {
  spec.validate();
  switch (spec.family) {
    case EnsembleFamily::kRandomInManifold:
      return closed_form_ratio(CaseD{spec.n, spec.k}, nu);
    case EnsembleFamily::kRandomCrossManifold:
    case EnsembleFamily::kLadderRandomWeights:
      return closed_form_ratio(CaseE{spec.n}, nu);
    case EnsembleFamily::kFullBasisRandomWeights:
      return closed_form_ratio(CaseF{spec.n}, nu);
  }
  throw ValidationError("unknown ensemble family");
}

DeviationStats deviation_stats(const EnsembleSpec& spec, double nu) {
  spec.validate();
  const auto reference = ensemble_reference(spec, nu);
  DeviationStats stats;
  stats.reference = *reference.ratio;
  stats.count = spec.count;
  stats.samples.assign(spec.count, 0.0);

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(spec.count); ++i) {
    try {
      const auto state = sample_state(spec, static_cast<std::size_t>(i));
      const auto r = ratio_analytic(state, nu);
      if (r.no_decoherence()) throw std::logic_error("sampled state does not decohere");
      stats.samples[static_cast<std::size_t>(i)] = *r.ratio;
    } catch (...) {
#pragma omp critical(dephase_ensemble_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  internal::CompensatedSum sum;
  for (double v : stats.samples) {
    sum.add(v);
    stats.max_abs_dev = std::max(stats.max_abs_dev, std::abs(v - stats.reference));
  }
  stats.mean = sum.value() / static_cast<double>(stats.count);
  if (stats.count > 1) {
    internal::CompensatedSum sq;
    for (double v : stats.samples) sq.add((v - stats.mean) * (v - stats.mean));
    stats.std = std::sqrt(sq.value() / static_cast<double>(stats.count - 1));
  }
  return stats;
}

nlohmann::json ensemble_to_json(const EnsembleSpec& spec, const DeviationStats& stats) {
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < stats.samples.size(); ++i) {
    samples.push_back({{"index", i}, {"ratio", stats.samples[i]}});
  }
  nlohmann::json summary = {{"family", to_string(spec.family)},
                            {"n", spec.n},
                            {"case", ensemble_reference(spec).case_label},
                            {"reference", stats.reference},
                            {"max_abs_dev", stats.max_abs_dev},
                            {"mean", stats.mean},
                            {"std", stats.std},
                            {"count", stats.count},
                            {"seed", spec.seed}};
  if (spec.family == EnsembleFamily::kRandomInManifold) summary["k"] = spec.k;
  return {{"samples", samples}, {"summary", summary}};
}

std::string ensemble_csv_row(const EnsembleSpec& spec, const DeviationStats& stats) {
  const std::string k =
      spec.family == EnsembleFamily::kRandomInManifold ? std::to_string(spec.k) : "";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%s,%s,%.17g,%.17g,%.17g,%.17g,%zu,%llu", spec.n, k.c_str(),
                ensemble_reference(spec).case_label.c_str(), stats.reference, stats.max_abs_dev,
                stats.mean, stats.std, stats.count,
                static_cast<unsigned long long>(spec.seed));
  return buf;
}

}  // namespace dephase
