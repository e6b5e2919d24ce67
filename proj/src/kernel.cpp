// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/kernel.hpp"

#include <cmath>

#include "dephase/errors.hpp"

namespace dephase {

void DecayKernel::validate() const {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ValidationError("decay exponent nu must be > 0");
  if (!(t_single > 0.0) || !std::isfinite(t_single)) {
    throw ValidationError("single-qubit time must be > 0");
  }
}

double pair_kernel(int j, double t, const DecayKernel& kernel) {
  kernel.validate();
  if (j < 0) throw ValidationError("differing-spin count must be >= 0");
  if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
  if (j == 0) return 1.0;
  return std::exp(-4.0 * j * std::pow(t / kernel.t_single, kernel.nu));
}

double pair_exponent_per_spin(double t, std::span<const DecayKernel> kernels) {
  if (kernels.empty()) throw ValidationError("at least one decay kernel is required");
  if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
  double sum = 0.0;
  for (const auto& k : kernels) {
    k.validate();
    sum += 4.0 * std::pow(t / k.t_single, k.nu);
  }
  return sum;
}

double combined_pair_kernel(int j, double t, std::span<const DecayKernel> kernels) {
  if (j < 0) throw ValidationError("differing-spin count must be >= 0");
  const double per_spin = pair_exponent_per_spin(t, kernels);
  return j == 0 ? 1.0 : std::exp(-j * per_spin);
}

}  // namespace dephase
