// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/histogram.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "dephase/errors.hpp"
#include "dephase/states.hpp"
#include "internal/compensated.hpp"

namespace dephase {
namespace {

// Fixed work partition; changing the thread count never changes summation order.
constexpr std::size_t kRowBlock = 64;
constexpr std::size_t kTransformBlock = std::size_t{1} << 14;

double sum_squares(std::span<const double> p) {
  internal::CompensatedSum s;
  for (double v : p) s.add(v * v);
  return s.value();
}

PairDifferenceHistogram enumerate(const SuperposedState& state) {
  const int n = state.n();
  const std::size_t bins = static_cast<std::size_t>(n) + 1;
  const std::size_t m = state.size();
  const auto pop = state.populations();
  std::vector<std::uint64_t> bits(m);
  for (std::size_t r = 0; r < m; ++r) bits[r] = state[r].basis.bits();

  const std::size_t blocks = (m + kRowBlock - 1) / kRowBlock;
  std::vector<double> partial(blocks * bins, 0.0);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    double* local = partial.data() + static_cast<std::size_t>(b) * bins;
    const std::size_t begin = static_cast<std::size_t>(b) * kRowBlock;
    const std::size_t end = std::min(m, begin + kRowBlock);
    for (std::size_t i = begin; i < end; ++i) {
      const double pi = pop[i];
      const std::uint64_t xi = bits[i];
      for (std::size_t k = i + 1; k < m; ++k) {
        local[std::popcount(xi ^ bits[k])] += pi * pop[k];
      }
    }
  }

  PairDifferenceHistogram h{n, sum_squares(pop), std::vector<double>(bins, 0.0)};
  for (std::size_t j = 1; j < bins; ++j) {
    internal::CompensatedSum s;
    for (std::size_t b = 0; b < blocks; ++b) s.add(partial[b * bins + j]);
    h.weights[j] = s.value();
  }
  return h;
}

// Unnormalized in-place Walsh-Hadamard transform.
void walsh_hadamard(std::vector<double>& a) {
  const std::size_t size = a.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(size / 2); ++idx) {
      const std::size_t u = static_cast<std::size_t>(idx);
      const std::size_t i = (u / h) * 2 * h + (u % h);
      const double x = a[i];
      const double y = a[i + h];
      a[i] = x + y;
      a[i + h] = x - y;
    }
  }
}

PairDifferenceHistogram transform(const SuperposedState& state) {
  const int n = state.n();
  if (n > kMaxFullSuperpositionQubits) {
    throw CapacityError("transform backend limited to n <= 24");
  }
  const std::size_t size = std::size_t{1} << n;
  const std::size_t bins = static_cast<std::size_t>(n) + 1;
  const auto pop = state.populations();
  std::vector<double> a(size, 0.0);
  for (std::size_t r = 0; r < state.size(); ++r) a[state[r].basis.bits()] = pop[r];

  // autocorrelation(z) = sum_x p(x) p(x ^ z) = WHT(WHT(p)^2)(z) / 2^n
  walsh_hadamard(a);
  for (double& v : a) v *= v;
  walsh_hadamard(a);
  const double scale = 1.0 / static_cast<double>(size);

  const std::size_t blocks = (size + kTransformBlock - 1) / kTransformBlock;
  std::vector<double> partial(blocks * bins, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    double* local = partial.data() + static_cast<std::size_t>(b) * bins;
    const std::size_t begin = static_cast<std::size_t>(b) * kTransformBlock;
    const std::size_t end = std::min(size, begin + kTransformBlock);
    for (std::size_t z = std::max<std::size_t>(begin, 1); z < end; ++z) {
      local[std::popcount(static_cast<std::uint64_t>(z))] += a[z];
    }
  }

  PairDifferenceHistogram h{n, sum_squares(pop), std::vector<double>(bins, 0.0)};
  for (std::size_t j = 1; j < bins; ++j) {
    internal::CompensatedSum s;
    for (std::size_t b = 0; b < blocks; ++b) s.add(partial[b * bins + j]);
    // Ordered pairs -> unordered; round-off can leave tiny negatives where the exact value is 0.
    h.weights[j] = std::max(0.0, 0.5 * s.value() * scale);
  }
  return h;
}

bool prefer_transform(const SuperposedState& state) {
  if (state.n() > kMaxFullSuperpositionQubits) return false;
  const double m = static_cast<double>(state.size());
  const double dense_cost = 4.0 * state.n() * std::ldexp(1.0, state.n());
  return 0.5 * m * m > dense_cost;
}

}  // namespace

double PairDifferenceHistogram::total() const {
  internal::CompensatedSum s;
  s.add(diag);
  for (double w : weights) s.add(2.0 * w);
  return s.value();
}

PairDifferenceHistogram pair_histogram(const SuperposedState& state, HistogramBackend backend) {
  switch (backend) {
    case HistogramBackend::kEnumerate:
      return enumerate(state);
    case HistogramBackend::kTransform:
      return transform(state);
    case HistogramBackend::kAuto:
      break;
  }
  return prefer_transform(state) ? transform(state) : enumerate(state);
}

PairDifferenceHistogram pair_histogram_closed_form(const ClosedFormHistogramCase& c) {
  if (const auto* mc = std::get_if<ManifoldCase>(&c)) {
    const int n = mc->n;
    const int k = mc->k;
    if (n < 1 || n > kMaxQubits || k < 0 || k > n) {
      throw ValidationError("manifold case needs 1 <= n <= 63 and 0 <= k <= n");
    }
    const double size = static_cast<double>(binomial(n, k));
    PairDifferenceHistogram h{n, 1.0 / size, std::vector<double>(static_cast<std::size_t>(n) + 1)};
    for (int j = 1; j <= std::min(k, n - k); ++j) {
      const double partners = static_cast<double>(binomial(n - k, j)) *
                              static_cast<double>(binomial(k, j));
      h.weights[static_cast<std::size_t>(2 * j)] = partners / (2.0 * size);
    }
    return h;
  }
  const int n = std::get<FullCase>(c).n;
  if (n < 1 || n > kMaxQubits) throw ValidationError("full case needs 1 <= n <= 63");
  PairDifferenceHistogram h{n, std::ldexp(1.0, -n),
                            std::vector<double>(static_cast<std::size_t>(n) + 1)};
  for (int j = 1; j <= n; ++j) {
    h.weights[static_cast<std::size_t>(j)] =
        std::ldexp(static_cast<double>(binomial(n, j)), -(n + 1));
  }
  return h;
}

double script_b(const PairDifferenceHistogram& hist) {
  internal::CompensatedSum s;
  for (std::size_t j = 1; j < hist.weights.size(); ++j) {
    s.add(static_cast<double>(j) * hist.weights[j]);
  }
  return 8.0 * s.value();
}

double script_b_polarization(const SuperposedState& state) {
  const int n = state.n();
  std::vector<internal::CompensatedSum> down(static_cast<std::size_t>(n));
  std::vector<internal::CompensatedSum> up(static_cast<std::size_t>(n));
  for (const auto& t : state.terms()) {
    const double p = std::norm(t.amplitude);
    for (int b = 0; b < n; ++b) {
      if ((t.basis.bits() >> b) & 1U) {
        down[static_cast<std::size_t>(b)].add(p);
      } else {
        up[static_cast<std::size_t>(b)].add(p);
      }
    }
  }
  internal::CompensatedSum s;
  for (std::size_t b = 0; b < down.size(); ++b) s.add(down[b].value() * up[b].value());
  return 8.0 * s.value();
}

}  // namespace dephase
