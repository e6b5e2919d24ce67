// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace dephase::internal {

/// Neumaier summation. Order-dependent, so callers fix the order.
class CompensatedSum {
 public:
  void add(double v) {
    const double s = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - s) + v : (v - s) + sum_;
    sum_ = s;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace dephase::internal
