// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include "doctest.h"
#include "dephase/errors.hpp"
#include "dephase/scaling.hpp"
#include "dephase/states.hpp"
#include "test_support.hpp"

using namespace dephase;

TEST_CASE("worked ratios") {
  CHECK(*ratio_analytic(make_w_generalized(3, 1)).ratio == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-14));
  CHECK(*ratio_analytic(make_ghz(1)).ratio == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*ratio_analytic(make_ghz(4)).ratio == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*ratio_analytic(make_ghz(4), 1.0).ratio == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ratio_analytic(SuperposedState({{1.0, ProductState::all_down(6)}})).no_decoherence());
  CHECK(ratio_analytic(make_w_generalized(4, 0)).no_decoherence());
  CHECK(*ratio_from_script_b(2.0, 3.0) == 1.0);
  CHECK_FALSE(ratio_from_script_b(0.0, 2.0).has_value());
  CHECK_THROWS_AS(ratio_from_script_b(1.0, 0.0), ValidationError);
}

TEST_CASE("closed forms match the pair functional") {
  for (int n = 2; n <= 12; ++n) {
    const double e = *closed_form_ratio(CaseE{n}).ratio;
    CHECK(*ratio_analytic(make_ladder(n)).ratio == doctest::Approx(e).epsilon(1e-13));
    CHECK(e == doctest::Approx(std::sqrt(3.0 * n / (2.0 * (n * n - 1.0)))).epsilon(1e-15));
    CHECK(*ratio_analytic(make_full_superposition(n)).ratio ==
          doctest::Approx(*closed_form_ratio(CaseF{n}).ratio).epsilon(1e-13));
    for (int k = 1; k < n; ++k) {
      const double d = *closed_form_ratio(CaseD{n, k}).ratio;
      CHECK(*ratio_analytic(make_w_generalized(n, k)).ratio == doctest::Approx(d).epsilon(1e-13));
      CHECK(d == *closed_form_ratio(CaseD{n, n - k}).ratio);
    }
    CHECK(closed_form_ratio(CaseD{n, 0}).no_decoherence());
    CHECK(closed_form_ratio(CaseD{n, n}).no_decoherence());
  }
  for (double nu : {1.0, 4.0, 6.0}) {
    const double r2 = *closed_form_ratio(CaseE{7}).ratio;
    CHECK(*closed_form_ratio(CaseE{7}, nu).ratio == doctest::Approx(std::pow(r2, 2.0 / nu)).epsilon(1e-14));
    CHECK(*ratio_analytic(make_ladder(7), nu).ratio ==
          doctest::Approx(*closed_form_ratio(CaseE{7}, nu).ratio).epsilon(1e-13));
  }
  CHECK(*closed_form_ratio(CaseB{5, 2, std::sqrt(0.5)}).ratio ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(closed_form_ratio(CaseE{1}), ValidationError);
  CHECK_THROWS_AS(closed_form_ratio(CaseB{3, 4, 0.5}), ValidationError);
  CHECK_THROWS_AS(closed_form_ratio(CaseD{3, 4}), ValidationError);
}

TEST_CASE("case C bound over random single-flip states") {
  Philox4x32 rng(101, 0);
  for (int n : {3, 6, 11}) {
    const auto bounds = case_c_bounds(n);
    CHECK(bounds.lower == doctest::Approx(0.5 * std::sqrt(n / (n - 1.0))).epsilon(1e-15));
    CHECK(bounds.upper == std::numeric_limits<double>::infinity());
    const auto bases = manifold_bases(n, 1);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t m = 2 + rng.bounded(static_cast<std::uint64_t>(n - 1));
      std::vector<Term> terms;
      for (std::size_t r = 0; r < m; ++r) terms.push_back({Amplitude(rng.normal(), rng.normal()), bases[r]});
      const auto s = SuperposedState::normalized(std::move(terms));
      CHECK(*ratio_analytic(s).ratio >= bounds.lower - 1e-12);
    }
  }
  CHECK_THROWS_AS(case_c_bounds(1), ValidationError);
}

TEST_CASE("analytic ratio is invariant under relabeling and independent of T") {
  Philox4x32 rng(7, 0);
  const auto s = testing::random_state(rng, 8, 25);
  const auto p = permute_qubits(s, std::vector<int>{7, 6, 5, 4, 3, 2, 1, 0});
  CHECK(*ratio_analytic(p).ratio == doctest::Approx(*ratio_analytic(s).ratio).epsilon(1e-14));
  CHECK(*ratio_analytic(s, DecayKernel{2.0, 1.0}).ratio == *ratio_analytic(s, DecayKernel{2.0, 17.0}).ratio);
  const double b = testing::script_b_oracle(s);
  CHECK(*ratio_analytic(s).ratio == doctest::Approx(std::sqrt(2.0 / b)).epsilon(1e-13));
}

TEST_CASE("short-time fit") {
  const DecayKernel k{2.0, 1.0};
  const auto s = make_ladder(5);
  const auto grid = linear_time_grid(0.3, 120);
  const auto c = fidelity_exact(s, grid, std::span<const DecayKernel>(&k, 1));
  const auto fit = fit_short_time(c, 2.0);
  CHECK(fit.samples >= kMinFitSamples);
  const auto r = ratio_fit(c, 2.0, 1.0);
  CHECK(r.method == ScalingMethod::kFit);
  CHECK(*r.ratio == doctest::Approx(*ratio_analytic(s).ratio).epsilon(1e-3));

  FidelityCurve few{{0.0, 0.1, 0.2}, {1.0, 0.99, 0.98}};
  CHECK_THROWS_AS(fit_short_time(few, 2.0), ValidationError);
  FidelityCurve bumpy{linear_time_grid(0.1, 10), std::vector<double>(10, 0.99)};
  bumpy.values[4] = 0.995;
  CHECK_THROWS_AS(fit_short_time(bumpy, 2.0), ValidationError);
  FidelityCurve flat{linear_time_grid(1.0, 10), std::vector<double>(10, 1.0)};
  CHECK(ratio_fit(flat, 2.0, 1.0).no_decoherence());
}

TEST_CASE("json form") {
  auto r = closed_form_ratio(CaseD{9, 3});
  const auto j = to_json(r);
  CHECK(j["n"] == 9);
  CHECK(j["k"] == 3);
  CHECK(j["method"] == "closed_form");
  CHECK(j["ratio"].get<double>() == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-15));
  CHECK(to_json(closed_form_ratio(CaseD{9, 0}))["ratio"] == "no_decoherence");
}
