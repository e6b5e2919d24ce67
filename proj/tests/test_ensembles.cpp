// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include <omp.h>

#include <cmath>
#include <set>

#include "doctest.h"
#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"
#include "dephase/states.hpp"

using namespace dephase;

namespace {

double norm_of(const SuperposedState& s) {
  double sum = 0.0;
  for (double p : s.populations()) sum += p;
  return sum;
}

}  // namespace

TEST_CASE("samples are deterministic per index") {
  const EnsembleSpec spec{EnsembleFamily::kRandomCrossManifold, 9, 1, 10, 77};
  const auto a = sample_state(spec, 3);
  const auto b = sample_state(spec, 3);
  const auto c = sample_state(spec, 4);
  REQUIRE(a.size() == b.size());
  bool differs = false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    CHECK(a[r].basis == b[r].basis);
    CHECK(a[r].amplitude == b[r].amplitude);
    differs = differs || a[r].amplitude != c[r].amplitude;
  }
  CHECK(differs);
}

TEST_CASE("family structure") {
  const std::uint64_t seed = 5;
  SUBCASE("in manifold") {
    const auto s = sample_state({EnsembleFamily::kRandomInManifold, 8, 3, 5, seed}, 0);
    CHECK(s.size() == binomial(8, 3));
    for (const auto& t : s.terms()) CHECK(t.basis.down_count() == 3);
    CHECK(norm_of(s) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("cross manifold") {
    const auto s = sample_state({EnsembleFamily::kRandomCrossManifold, 10, 1, 5, seed}, 2);
    std::set<int> manifolds;
    for (const auto& t : s.terms()) manifolds.insert(t.basis.down_count());
    CHECK(manifolds == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  }
  SUBCASE("ladder") {
    const auto s = sample_state({EnsembleFamily::kLadderRandomWeights, 6, 1, 5, seed}, 1);
    const auto l = make_ladder(6);
    for (std::size_t r = 0; r < s.size(); ++r) CHECK(s[r].basis == l[r].basis);
  }
  SUBCASE("full basis") {
    CHECK(sample_state({EnsembleFamily::kFullBasisRandomWeights, 5, 1, 5, seed}, 0).size() == 32);
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(EnsembleSpec({EnsembleFamily::kRandomInManifold, 5, 0, 10, 1}).validate(), ValidationError);
  CHECK_THROWS_AS(EnsembleSpec({EnsembleFamily::kRandomInManifold, 5, 5, 10, 1}).validate(), ValidationError);
  CHECK_THROWS_AS(EnsembleSpec({EnsembleFamily::kRandomInManifold, 5, 2, 0, 1}).validate(), ValidationError);
  CHECK_THROWS_AS(EnsembleSpec({EnsembleFamily::kFullBasisRandomWeights, 25, 1, 1, 1}).validate(), CapacityError);
  CHECK_THROWS_AS(sample_state({EnsembleFamily::kLadderRandomWeights, 5, 1, 3, 1}, 3), ValidationError);
}

TEST_CASE("equal weights reproduce the reference exactly") {
  for (auto family : {EnsembleFamily::kRandomInManifold, EnsembleFamily::kLadderRandomWeights,
                      EnsembleFamily::kFullBasisRandomWeights}) {
    const EnsembleSpec spec{family, 9, 4, 6, 3, WeightLaw::kEqual};
    const auto stats = deviation_stats(spec);
    CHECK(stats.max_abs_dev < 1e-12);
    CHECK(stats.std < 1e-12);
  }
}

TEST_CASE("deviation shrinks with n") {
  for (int k : {2, 3}) {
    const auto small = deviation_stats({EnsembleFamily::kRandomInManifold, 7, k, 60, 11});
    const auto large = deviation_stats({EnsembleFamily::kRandomInManifold, 14, k, 60, 11});
    CHECK(large.max_abs_dev < small.max_abs_dev);
    CHECK(small.count == 60);
    CHECK(small.samples.size() == 60);
  }
}

TEST_CASE("deviation stats do not depend on thread count") {
  const EnsembleSpec spec{EnsembleFamily::kRandomCrossManifold, 12, 1, 40, 9};
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto a = deviation_stats(spec);
  omp_set_num_threads(3);
  const auto b = deviation_stats(spec);
  omp_set_num_threads(saved);
  CHECK(a.samples == b.samples);
  CHECK(a.mean == b.mean);
  CHECK(a.std == b.std);
  CHECK(a.max_abs_dev == b.max_abs_dev);
}

TEST_CASE("ensemble output") {
  const EnsembleSpec spec{EnsembleFamily::kRandomInManifold, 7, 2, 4, 1};
  const auto stats = deviation_stats(spec);
  const auto row = ensemble_csv_row(spec, stats);
  CHECK(row.rfind("7,2,", 0) == 0);
  const auto j = ensemble_to_json(spec, stats);
  CHECK(j["samples"].size() == 4);
  CHECK(j["summary"]["count"] == 4);
}
