// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

#include "dephase/scaling.hpp"

#include <cmath>
#include <limits>

#include "dephase/errors.hpp"
#include "dephase/histogram.hpp"

namespace dephase {
namespace {

void check_nu(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ValidationError("decay exponent nu must be > 0");
}

double reindex(double ratio_nu2, double nu) {
  return nu == 2.0 ? ratio_nu2 : std::pow(ratio_nu2, 2.0 / nu);
}

ScalingResult closed(int n, std::optional<int> k, std::string label, double nu,
                     std::optional<double> ratio_nu2) {
  ScalingResult r;
  r.method = ScalingMethod::kClosedForm;
  r.n = n;
  r.k = k;
  r.case_label = std::move(label);
  r.nu = nu;
  if (ratio_nu2) r.ratio = reindex(*ratio_nu2, nu);
  return r;
}

}  // namespace

std::string to_string(ScalingMethod method) {
  switch (method) {
    case ScalingMethod::kAnalyticB:
      return "analytic_b";
    case ScalingMethod::kClosedForm:
      return "closed_form";
    case ScalingMethod::kFit:
      return "fit";
    case ScalingMethod::kMonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

nlohmann::json to_json(const ScalingResult& result) {
  nlohmann::json j;
  j["n"] = result.n;
  if (result.k) j["k"] = *result.k;
  j["case"] = result.case_label;
  j["nu"] = result.nu;
  if (result.ratio) {
    j["ratio"] = *result.ratio;
  } else {
    j["ratio"] = "no_decoherence";
  }
  j["method"] = to_string(result.method);
  return j;
}

std::optional<double> ratio_from_script_b(double script_b, double nu) {
  check_nu(nu);
  if (!(script_b >= 0.0)) throw ValidationError("pair functional must be non-negative");
  if (script_b == 0.0) return std::nullopt;
  return std::pow(0.5 * script_b, -1.0 / nu);
}

ScalingResult ratio_analytic(const SuperposedState& state, double nu) {
  ScalingResult r;
  r.method = ScalingMethod::kAnalyticB;
  r.n = state.n();
  r.nu = nu;
  r.ratio = ratio_from_script_b(script_b_polarization(state), nu);
  return r;
}

ScalingResult ratio_analytic(const SuperposedState& state, const DecayKernel& kernel) {
  kernel.validate();
  return ratio_analytic(state, kernel.nu);
}

ShortTimeFit fit_short_time(const FidelityCurve& curve, double nu) {
  check_nu(nu);
  const auto& t = curve.times;
  const auto& f = curve.values;
  if (t.size() != f.size()) throw ValidationError("curve times and values differ in length");
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (t[i] < t[i - 1]) throw ValidationError("curve times are not sorted");
    if (f[i] > f[i - 1] + 1e-14) throw ValidationError("fidelity curve is not monotone");
  }
  ShortTimeFit fit;
  // Normal equations for y = a u + b u^2 (no intercept: -ln F(0) = 0).
  double s_uu = 0.0, s_uuu = 0.0, s_uuuu = 0.0, s_uy = 0.0, s_uuy = 0.0;
  std::size_t usable = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f[i] >= kFitWindowFloor)) continue;
    ++fit.samples;
    if (t[i] <= 0.0) continue;
    const double u = std::pow(t[i], nu);
    const double y = -std::log(f[i]);
    s_uu += u * u;
    s_uuu += u * u * u;
    s_uuuu += u * u * u * u;
    s_uy += u * y;
    s_uuy += u * u * y;
    ++usable;
  }
  if (fit.samples < kMinFitSamples || usable < 2) {
    throw ValidationError("insufficient short-time samples: need >= 8 with F >= 0.9, have " +
                          std::to_string(fit.samples));
  }
  const double det = s_uu * s_uuuu - s_uuu * s_uuu;
  if (!(det > 0.0)) throw ValidationError("degenerate short-time window");
  fit.a = (s_uy * s_uuuu - s_uuy * s_uuu) / det;
  fit.b = (s_uu * s_uuy - s_uuu * s_uy) / det;
  return fit;
}

ScalingResult ratio_fit(const FidelityCurve& curve, double nu, double t_single) {
  if (!(t_single > 0.0)) throw ValidationError("single-qubit time must be > 0");
  ScalingResult r;
  r.method = ScalingMethod::kFit;
  r.nu = nu;

  bool flat = true;
  for (double v : curve.values) flat = flat && v >= 1.0 - 1e-15;
  if (flat) {
    if (curve.values.size() < kMinFitSamples) {
      throw ValidationError("insufficient short-time samples");
    }
    return r;
  }
  const auto fit = fit_short_time(curve, nu);
  if (!(fit.a > 0.0)) throw ValidationError("fitted short-time coefficient is not positive");
  r.ratio = std::pow(fit.a, -1.0 / nu) / t_single;
  return r;
}

ScalingResult closed_form_ratio(const ClosedFormCase& c, double nu) {
  check_nu(nu);
  if (const auto* b = std::get_if<CaseB>(&c)) {
    if (b->n < 1 || b->k < 1 || b->k > b->n) throw ValidationError("case B needs 1 <= k <= n");
    if (!(b->d1_abs >= 0.0 && b->d1_abs <= 1.0)) {
      throw ValidationError("case B needs 0 <= |d1| <= 1");
    }
    const double d2 = std::sqrt(std::max(0.0, 1.0 - b->d1_abs * b->d1_abs));
    const double product = b->d1_abs * d2;
    if (product == 0.0) return closed(b->n, b->k, "B", nu, std::nullopt);
    return closed(b->n, b->k, "B", nu, 1.0 / (2.0 * product * std::sqrt(double(b->k))));
  }
  if (const auto* d = std::get_if<CaseD>(&c)) {
    if (d->n < 1 || d->k < 0 || d->k > d->n) throw ValidationError("case D needs 0 <= k <= n");
    if (d->k == 0 || d->k == d->n) return closed(d->n, d->k, "D", nu, std::nullopt);
    const double n = d->n;
    const double k = d->k;
    return closed(d->n, d->k, "D", nu, 0.5 * std::sqrt(n / (k * (n - k))));
  }
  if (const auto* e = std::get_if<CaseE>(&c)) {
    if (e->n < 2) throw ValidationError("case E needs n >= 2");
    const double n = e->n;
    return closed(e->n, std::nullopt, "E", nu, std::sqrt(3.0 * n / (2.0 * (n * n - 1.0))));
  }
  const auto& f = std::get<CaseF>(c);
  if (f.n < 1) throw ValidationError("case F needs n >= 1");
  return closed(f.n, std::nullopt, "F", nu, 1.0 / std::sqrt(double(f.n)));
}

RatioBounds case_c_bounds(int n, double nu) {
  check_nu(nu);
  if (n < 2) throw ValidationError("case C needs n >= 2");
  const double lower = 0.5 * std::sqrt(double(n) / double(n - 1));
  return {reindex(lower, nu), std::numeric_limits<double>::infinity()};
}

}  // namespace dephase
