// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "json.hpp"

#include "dephase/fidelity.hpp"
#include "dephase/kernel.hpp"
#include "dephase/superposed_state.hpp"

namespace dephase {

enum class ScalingMethod { kAnalyticB, kClosedForm, kFit, kMonteCarlo };

std::string to_string(ScalingMethod method);

/// T(n)/T(1) for one state, or no decoherence at all (ratio empty).
struct ScalingResult {
  std::optional<double> ratio;
  ScalingMethod method = ScalingMethod::kAnalyticB;
  int n = 0;
  std::optional<int> k;
  std::string case_label;
  double nu = 2.0;

  bool no_decoherence() const { return !ratio.has_value(); }
};

/// {n, k?, case, nu, ratio | "no_decoherence", method}
nlohmann::json to_json(const ScalingResult& result);

/**
 * Ratio from the pair functional B: short-time F ~ exp{-(B/2)(t/T(1))^nu},
 * so T(n)/T(1) = (B/2)^(-1/nu). At nu = 2 this is sqrt(2/B). Empty when B = 0.
 */
std::optional<double> ratio_from_script_b(double script_b, double nu);

/// Short-time ratio of `state` from B (computed in O(m n)).
ScalingResult ratio_analytic(const SuperposedState& state, double nu = 2.0);

/// Same ratio using the kernel's exponent. The single-qubit time cancels, so any
/// channel with the same nu gives a bit-identical result.
ScalingResult ratio_analytic(const SuperposedState& state, const DecayKernel& kernel);

/// Least-squares coefficients of -ln F = a u + b u^2 with u = t^nu.
struct ShortTimeFit {
  double a = 0.0;
  double b = 0.0;
  std::size_t samples = 0;
};

/// Minimum samples with F >= kFitWindowFloor required by the fit.
inline constexpr std::size_t kMinFitSamples = 8;
inline constexpr double kFitWindowFloor = 0.9;

/**
 * Fits the short-time window (F >= 0.9) of a curve. The quadratic term soaks
 * up the leading curvature of -ln F so `a` estimates the t^nu coefficient.
 * Throws on non-monotone curves or fewer than 8 window samples.
 */
ShortTimeFit fit_short_time(const FidelityCurve& curve, double nu);

/// T_fit / t_single with T_fit = a^(-1/nu); no decoherence for a flat curve.
ScalingResult ratio_fit(const FidelityCurve& curve, double nu, double t_single);

struct CaseB {
  int n;
  int k;
  double d1_abs;  // |d2| = sqrt(1 - |d1|^2)
};
struct CaseD {
  int n;
  int k;
};
struct CaseE {
  int n;
};
struct CaseF {
  int n;
};
using ClosedFormCase = std::variant<CaseB, CaseD, CaseE, CaseF>;

/**
 * Closed-form short-time ratios. For nu != 2 every nu = 2 value r becomes
 * r^(2/nu), the power law index -1/2 turning into -1/nu.
 *
 *   B: 1 / (2 |d1 d2| sqrt(k))
 *   D: (1/2) sqrt(n / (k (n - k))), no decoherence for k in {0, n}
 *   E: sqrt(3n / (2 (n^2 - 1))), n >= 2
 *   F: 1 / sqrt(n)
 */
ScalingResult closed_form_ratio(const ClosedFormCase& c, double nu = 2.0);

struct RatioBounds {
  double lower;
  double upper;  // +inf: a single product state never decoheres
};

/// Range of ratios over all superpositions in the k = 1 manifold: [(1/2) sqrt(n/(n-1)), inf).
RatioBounds case_c_bounds(int n, double nu = 2.0);

}  // namespace dephase
