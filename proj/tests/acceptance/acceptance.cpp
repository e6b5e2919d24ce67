// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Every tolerance and seed is fixed here.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dephase/ensembles.hpp"
#include "dephase/experiments.hpp"
#include "dephase/fidelity.hpp"
#include "dephase/histogram.hpp"
#include "dephase/oracle.hpp"
#include "dephase/rng.hpp"
#include "dephase/scaling.hpp"
#include "dephase/states.hpp"

using namespace dephase;

namespace {

constexpr std::uint64_t kSeed = experiments::kDefaultSeed;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

// Pair functional by enumerating every unordered pair.
double pair_functional_oracle(const SuperposedState& s) {
  const auto pop = s.populations();
  long double sum = 0.0L;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::uint64_t bi = s[i].basis.bits();
    long double row = 0.0L;
    for (std::size_t k = i + 1; k < s.size(); ++k) {
      row += static_cast<long double>(pop[k]) * std::popcount(bi ^ s[k].basis.bits());
    }
    sum += row * pop[i];
  }
  return static_cast<double>(8.0L * sum);
}

Outcome criterion1() {
  constexpr double kTol = 1e-10;
  constexpr double kBudget = 1.0;
  Outcome out;
  double worst = 0.0;
  double library_seconds = 0.0;
  auto check = [&](const SuperposedState& s, double expected) {
    const auto start = Clock::now();
    const double poly = script_b_polarization(s);
    const double hist = script_b(pair_histogram(s));
    library_seconds += seconds_since(start);
    const double brute = pair_functional_oracle(s);
    for (double v : {poly, hist, brute}) {
      const double err = std::abs(v - expected);
      worst = std::max(worst, err);
      if (err > kTol) out.pass = false;
    }
  };
  for (int n = 1; n <= 32; ++n) check(make_ghz(n), 2.0 * n);
  for (int n = 1; n <= 16; ++n) {
    for (int k = 0; k <= n; ++k) check(make_w_generalized(n, k), 8.0 * k * (n - k) / n);
  }
  for (int n = 1; n <= 32; ++n) check(make_ladder(n), 4.0 * (n * n - 1.0) / (3.0 * n));
  for (int n = 1; n <= 12; ++n) check(make_full_superposition(n), 2.0 * n);
  if (library_seconds >= kBudget) out.pass = false;
  out.detail = fmt("max |B - closed form| = %.3g (tol 1e-10), library time %.3f s (< 1 s)", worst,
                   library_seconds);
  return out;
}

Outcome criterion2() {
  const double r = *ratio_analytic(make_w_generalized(3, 1), 2.0).ratio;
  const double err = std::abs(r - std::sqrt(3.0 / 8.0));
  return {err <= 1e-12, fmt("W(3) ratio %.17g, |err| = %.3g (tol 1e-12)", r, err)};
}

Outcome criterion3() {
  Outcome out;
  double worst = 0.0;
  Philox4x32 rng(kSeed, 3);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 7 * 3;
    const int k = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
    const double d1 = 0.05 + 0.9 * i / 19.0;
    const double phase = 2.0 * M_PI * rng.uniform();
    const Amplitude d2 = std::polar(std::sqrt(1.0 - d1 * d1), phase);
    const double r = *ratio_analytic(make_two_state(n, k, d1, d2)).ratio;
    const double expected = 1.0 / (2.0 * d1 * std::abs(d2) * std::sqrt(static_cast<double>(k)));
    const double rel = std::abs(r - expected) / expected;
    const double abs_err = std::abs(r - expected);
    worst = std::max(worst, abs_err);
    if (abs_err > 1e-12 && rel > 1e-12) out.pass = false;
  }
  out.detail = fmt("20 two-state cases, max |err| = %.3g (tol 1e-12)", worst);
  return out;
}

Outcome criterion4() {
  Outcome out;
  double min_margin = 1e300;
  double equal_err = 0.0;
  for (int n : {5, 20}) {
    const double bound = 0.5 * std::sqrt(n / (n - 1.0));
    const auto bases = manifold_bases(n, 1);
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Philox4x32 rng(kSeed, (static_cast<std::uint64_t>(n) << 32) | i);
      std::vector<Term> terms;
      for (const auto& b : bases) terms.push_back({Amplitude(rng.normal(), rng.normal()), b});
      const double r = *ratio_analytic(SuperposedState::normalized(std::move(terms))).ratio;
      min_margin = std::min(min_margin, r - bound);
      if (r < bound - 1e-9) out.pass = false;
    }
    const double eq = *ratio_analytic(make_w_generalized(n, 1)).ratio;
    equal_err = std::max(equal_err, std::abs(eq - bound));
    if (std::abs(eq - bound) > 1e-9) out.pass = false;
  }
  out.detail = fmt("2000 states, min(ratio - bound) = %.3g (>= -1e-9), equal-weight |err| = %.3g (tol 1e-9)",
                   min_margin, equal_err);
  return out;
}

Outcome criterion5() {
  constexpr double kRelTol = 0.02;
  Outcome out;
  const auto start = Clock::now();
  double worst = 0.0;
  int cases = 0;
  for (const char* family : {"ghz", "w", "ladder", "full"}) {
    for (int n = 2; n <= 12; ++n) {
      const auto state = experiments::build_state(family, n, 1);
      for (double nu : {1.0, 2.0, 4.0, 6.0}) {
        const DecayKernel k{nu, 1.0};
        const std::span<const DecayKernel> ks(&k, 1);
        const double analytic = *ratio_analytic(state, k).ratio;
        try {
          const auto curve = fidelity_exact(state, experiments::default_time_grid(state, ks), ks);
          const double fit = *ratio_fit(curve, nu, k.t_single).ratio;
          const double rel = std::abs(fit - analytic) / analytic;
          worst = std::max(worst, rel);
          if (rel > kRelTol) out.pass = false;
        } catch (const std::exception&) {
          out.pass = false;
        }
        ++cases;
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) out.pass = false;
  out.detail = fmt("%.0f cases, max relative error %.3g (tol 0.02), %.2f s (< 10 s)", cases, worst,
                   elapsed);
  return out;
}

Outcome criterion6() {
  constexpr double kSigmas = 3.0;
  Outcome out;
  const auto start = Clock::now();
  int failures = 0;
  double worst_z = 0.0;
  for (double t : {0.1, 0.25, 0.5}) {
    const auto est = oracle::mc_pair_decay(1, t, 100000, kSeed);
    const double z = std::abs(est.value - std::exp(-4.0 * t * t)) / est.std_err;
    worst_z = std::max(worst_z, z);
    if (z > kSigmas) ++failures;
  }
  Philox4x32 rng(kSeed, 6);
  const DecayKernel k{};
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + static_cast<int>(rng.bounded(8));
    const std::size_t space = std::size_t{1} << n;
    const std::size_t m = 2 + rng.bounded(std::min<std::uint64_t>(space - 1, 15));
    // m distinct bases by partial shuffle of 0..2^n-1.
    std::vector<std::uint64_t> pool(space);
    for (std::size_t b = 0; b < space; ++b) pool[b] = b;
    std::vector<Term> terms;
    for (std::size_t r = 0; r < m; ++r) {
      std::swap(pool[r], pool[r + rng.bounded(space - r)]);
      terms.push_back({Amplitude(rng.normal(), rng.normal()), ProductState(n, pool[r])});
    }
    const auto s = SuperposedState::normalized(std::move(terms));
    const double t = 0.4 * rng.uniform() + 0.05;
    const double exact = fidelity_exact(s, std::vector<double>{t}, std::span<const DecayKernel>(&k, 1)).values[0];
    const auto est = oracle::mc_fidelity(s, t, 10000, kSeed + static_cast<std::uint64_t>(i));
    const double z = std::abs(est.value - exact) / est.std_err;
    worst_z = std::max(worst_z, z);
    if (z > kSigmas) ++failures;
  }
  const double elapsed = seconds_since(start);
  out.pass = failures == 0 && elapsed < 60.0;
  out.detail = fmt("53 comparisons, %.0f beyond 3 std errors, max z = %.2f, %.2f s (< 60 s)", failures,
                   worst_z, elapsed);
  return out;
}

double max_dev(EnsembleFamily family, int n, int k) {
  return deviation_stats({family, n, k, 100, kSeed}).max_abs_dev;
}

Outcome criterion7() {
  Outcome out;
  std::string detail = "fig2";
  for (int k : {2, 3, 4}) {
    const double small = max_dev(EnsembleFamily::kRandomInManifold, 7, k);
    const double large = max_dev(EnsembleFamily::kRandomInManifold, 20, k);
    if (!(large < small)) out.pass = false;
    detail += fmt(" k=%.0f %.3g->%.3g", k, small, large);
  }
  const auto a = EnsembleFamily::kRandomCrossManifold;
  const auto b = EnsembleFamily::kLadderRandomWeights;
  const double a7 = max_dev(a, 7, 0), a10 = max_dev(a, 10, 0), a20 = max_dev(a, 20, 0);
  const double b7 = max_dev(b, 7, 0), b10 = max_dev(b, 10, 0), b20 = max_dev(b, 20, 0);
  const bool a_ge_b = a10 >= b10;
  if (!a_ge_b || !(a20 < a7) || !(b20 < b7)) out.pass = false;
  detail += fmt("; fig3 a@10 %.3g ", a10) + (a_ge_b ? ">=" : "<") + fmt(" b@10 %.3g", b10);
  detail += fmt(", a %.3g->%.3g", a7, a20) + fmt(", b %.3g->%.3g", b7, b20);
  const double f7 = max_dev(EnsembleFamily::kFullBasisRandomWeights, 7, 0);
  const double f12 = max_dev(EnsembleFamily::kFullBasisRandomWeights, 12, 0);
  if (!(f12 < f7)) out.pass = false;
  detail += fmt("; fig4 %.3g->%.3g", f7, f12);
  out.detail = detail;
  return out;
}

Outcome criterion8() {
  Outcome out;
  const double expected[] = {1.0 / 16.0, 0.25, 0.5, std::pow(16.0, -1.0 / 6.0)};
  const double nus[] = {1.0, 2.0, 4.0, 6.0};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double r = *ratio_analytic(make_ghz(16), nus[i]).ratio;
    worst = std::max(worst, std::abs(r - expected[i]));
  }
  out.pass = worst <= 1e-9;
  out.detail = fmt("GHZ(16) nu=1,2,4,6 max |err| = %.3g (tol 1e-9)", worst);
  return out;
}

Outcome criterion9() {
  const DecayKernel ib{2.0, 1.0};
  const DecayKernel ns{2.0, 37.5};
  Philox4x32 rng(kSeed, 9);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.bounded(16));
    const std::size_t space = std::size_t{1} << n;
    const std::size_t m = 2 + rng.bounded(std::min<std::uint64_t>(space - 1, 40));
    std::vector<std::uint64_t> picked;
    std::vector<Term> terms;
    while (terms.size() < m) {
      const std::uint64_t b = rng.bounded(space);
      if (std::find(picked.begin(), picked.end(), b) != picked.end()) continue;
      picked.push_back(b);
      terms.push_back({Amplitude(rng.normal(), rng.normal()), ProductState(n, b)});
    }
    const auto s = SuperposedState::normalized(std::move(terms));
    const auto a = ratio_analytic(s, ib).ratio;
    const auto c = ratio_analytic(s, ns).ratio;
    if (!a || !c || std::bit_cast<std::uint64_t>(*a) != std::bit_cast<std::uint64_t>(*c)) ++mismatches;
  }
  return {mismatches == 0, fmt("100 states, %.0f bitwise mismatches between T2*(1)=1 and T2(1)=37.5", mismatches)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"closed-form pair functional identities", criterion1},
      {"W(3) worked example", criterion2},
      {"two-state ratio sweep", criterion3},
      {"single-flip lower bound", criterion4},
      {"fit versus analytic ratio", criterion5},
      {"Monte Carlo calibration", criterion6},
      {"ensemble trends", criterion7},
      {"decay-exponent extension", criterion8},
      {"channel scaling equality", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %zu %s: %s | %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
