// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include "dephase/errors.hpp"
#include "dephase/rng.hpp"

namespace dephase::oracle {
namespace {

constexpr std::size_t kShotBlock = 256;

// Stream ids: the top byte separates the estimators so one seed gives independent draws.
constexpr std::uint64_t kFidelityDomain = std::uint64_t{1} << 56;
constexpr std::uint64_t kPairDomain = std::uint64_t{2} << 56;
constexpr std::uint64_t kSingleDomain = std::uint64_t{3} << 56;

struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }
  // Chan et al. pairwise merge.
  void merge(const Moments& o) {
    if (o.count == 0.0) return;
    const double total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * o.count / total;
    m2 += o.m2 + delta * delta * count * o.count / total;
    count = total;
  }
  double std_err() const { return count > 1.0 ? std::sqrt(m2 / (count - 1.0) / count) : 0.0; }
};

void check_shots(std::size_t n_samples, double t) {
  if (n_samples < kMinShots) throw ValidationError("Monte Carlo needs at least 100 shots");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("time must be >= 0");
}

void check_t2star(double t2star) {
  if (!(t2star > 0.0) || !std::isfinite(t2star)) throw ValidationError("T2*(1) must be > 0");
}

// Runs `shot(rng, moments)` n_samples times in fixed blocks and merges in block order.
template <typename Shot>
Moments run_blocks(std::size_t n_samples, std::uint64_t seed, std::uint64_t domain, Shot shot) {
  const std::size_t blocks = (n_samples + kShotBlock - 1) / kShotBlock;
  std::vector<Moments> partial(blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    Philox4x32 rng(seed, domain | static_cast<std::uint64_t>(b));
    const std::size_t begin = static_cast<std::size_t>(b) * kShotBlock;
    const std::size_t end = std::min(n_samples, begin + kShotBlock);
    for (std::size_t s = begin; s < end; ++s) shot(rng, partial[static_cast<std::size_t>(b)]);
  }
  Moments total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace

double field_sigma(double t2star) {
  check_t2star(t2star);
  return std::sqrt(2.0) / t2star;
}

std::vector<double> sample_overhauser_field(int n, double t2star, std::uint64_t seed,
                                            std::uint64_t shot) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count must be in [1, 63]");
  const double sigma = field_sigma(t2star);
  Philox4x32 rng(seed, shot);
  std::vector<double> bz(static_cast<std::size_t>(n));
  for (double& b : bz) b = sigma * rng.normal();
  return bz;
}

McEstimate mc_fidelity(const SuperposedState& state, double t, std::size_t n_samples,
                       std::uint64_t seed, double t2star) {
  check_shots(n_samples, t);
  const double sigma = field_sigma(t2star);
  const int n = state.n();
  const auto pop = state.populations();
  std::vector<std::uint64_t> bits(state.size());
  for (std::size_t r = 0; r < state.size(); ++r) bits[r] = state[r].basis.bits();

  const auto moments = run_blocks(n_samples, seed, kFidelityDomain, [&](Philox4x32& rng,
                                                                        Moments& acc) {
    double field[kMaxQubits] = {};
    double up_total = 0.0;
    for (int j = 0; j < n; ++j) {
      field[j] = sigma * rng.normal();
      up_total += field[j];
    }
    // <x(0)|x(t)> = sum_r |d_r|^2 exp(-i t sum_j l_j^r B_j)
    std::complex<double> overlap = 0.0;
    for (std::size_t r = 0; r < bits.size(); ++r) {
      double down = 0.0;
      for (std::uint64_t b = bits[r]; b != 0; b &= b - 1) down += field[std::countr_zero(b)];
      const double phase = t * (up_total - 2.0 * down);
      overlap += pop[r] * std::polar(1.0, -phase);
    }
    acc.add(std::norm(overlap));
  });

  McEstimate est;
  est.n_samples = n_samples;
  const double mean = std::max(0.0, moments.mean);
  est.value = std::sqrt(mean);
  const double se_mean = moments.std_err();
  est.std_err = est.value > 0.0 ? se_mean / (2.0 * est.value) : std::sqrt(se_mean);
  return est;
}

McEstimate mc_pair_decay(int j, double t, std::size_t n_samples, std::uint64_t seed,
                         double t2star) {
  if (j < 0) throw ValidationError("differing-spin count must be >= 0");
  check_shots(n_samples, t);
  const double sigma = field_sigma(t2star);
  if (j == 0) return {1.0, 0.0, n_samples};
  const auto moments = run_blocks(n_samples, seed, kPairDomain, [&](Philox4x32& rng,
                                                                    Moments& acc) {
    double theta = 0.0;
    for (int i = 0; i < j; ++i) theta += 2.0 * sigma * rng.normal();
    acc.add(std::cos(theta * t));
  });
  return {moments.mean, moments.std_err(), n_samples};
}

McEstimate mc_single_spin_decay(double t, std::size_t n_samples, std::uint64_t seed,
                                double t2star) {
  check_shots(n_samples, t);
  const double sigma = field_sigma(t2star);
  // The field distribution is symmetric, so the imaginary part averages to zero.
  const auto moments = run_blocks(n_samples, seed, kSingleDomain,
                                  [&](Philox4x32& rng, Moments& acc) {
                                    acc.add(std::cos(sigma * rng.normal() * t));
                                  });
  return {moments.mean, moments.std_err(), n_samples};
}

double brute_force_fidelity(const SuperposedState& state, double t, const DecayKernel& kernel) {
  return brute_force_fidelity(state, t, std::span<const DecayKernel>(&kernel, 1));
}

double brute_force_fidelity(const SuperposedState& state, double t,
                            std::span<const DecayKernel> kernels) {
  if (state.size() > kBruteForceMaxTerms) {
    throw CapacityError("brute-force fidelity limited to 4096 terms");
  }
  if (kernels.empty()) throw ValidationError("at least one decay kernel is required");
  if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
  const auto terms = state.terms();
  double radicand = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double pi = std::norm(terms[i].amplitude);
    radicand += pi * pi;
    for (std::size_t k = i + 1; k < terms.size(); ++k) {
      const int j = hamming(terms[i].basis, terms[k].basis);
      double m = 1.0;
      for (const auto& kernel : kernels) m *= pair_kernel(j, t, kernel);
      radicand += 2.0 * pi * std::norm(terms[k].amplitude) * m;
    }
  }
  return std::sqrt(radicand);
}

nlohmann::json to_json(double t, const McEstimate& estimate) {
  return {{"t", t},
          {"estimate", estimate.value},
          {"std_err", estimate.std_err},
          {"shots", estimate.n_samples}};
}

}  // namespace dephase::oracle
