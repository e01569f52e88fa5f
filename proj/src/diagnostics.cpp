#include "kuranet/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kuranet/errors.hpp"

namespace kuranet {

double diameter(std::span<const double> x) {
  if (x.empty()) fail(ErrorCode::EmptyVector, "diameter of empty vector");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

double d_omega_nat(std::span<const double> omega_natural) {
  if (omega_natural.empty()) fail(ErrorCode::EmptyVector, "empty frequency vector");
  const std::size_t n = omega_natural.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = omega_natural[i] - omega_natural[j];
      sum += d * d;
    }
  return sum;
}

namespace {

/// 2m sum dx*dy + (1 - m sqrt(K)) sum dx^2 + 2m^2 sum dy^2 over ordered pairs.
double pair_energy(std::span<const double> x, std::span<const double> y, double m,
                   double coupling_k) {
  const std::size_t n = x.size();
  double s_xx = 0.0, s_xy = 0.0, s_yy = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      s_xx += dx * dx;
      s_xy += dx * dy;
      s_yy += dy * dy;
    }
  return 2.0 * m * s_xy + (1.0 - m * std::sqrt(coupling_k)) * s_xx +
         2.0 * m * m * s_yy;
}

}  // namespace

double energy_e1(const OscState& state, const ModelParams& params) {
  state.validate();
  if (state.theta.size() != state.omega.size())
    fail(ErrorCode::DimensionMismatch, "theta/omega length mismatch");
  return pair_energy(state.theta, state.omega, params.m, params.coupling_k);
}

double energy_e2_with_accel(const OscState& state, const ModelParams& params,
                            const std::vector<double>& accel) {
  if (accel.size() != state.omega.size())
    fail(ErrorCode::DimensionMismatch, "accel/omega length mismatch");
  return pair_energy(state.omega, accel, params.m, params.coupling_k);
}

double energy_e2(const OscState& state, const ModelParams& params,
                 const WeightedGraph& graph) {
  return energy_e2_with_accel(state, params, acceleration(state, params, graph));
}

double constant_c1(const ModelParams& params, const GraphConstants& gc, double d0,
                   int n, double d_omega_nat_value) {
  if (!(d0 > 0.0) || !(d0 < std::numbers::pi))
    fail(ErrorCode::BadDomain, "D0 must lie in (0, pi)");
  const double k = params.coupling_k;
  const double m = params.m;
  const double sqrt_k = std::sqrt(k);
  const double cos_a = std::cos(params.alpha);
  const double sin_a = std::sin(params.alpha);
  const double factor = 1.0 + static_cast<double>(gc.card_ec) * gc.r;
  const double sin_d0 = std::sin(d0);
  const double nn = static_cast<double>(n);

  const double drift_term =
      (3.0 * factor * d0 / (k * sqrt_k * gc.a_l * cos_a * sin_d0) + 12.0 * m / sqrt_k) *
      d_omega_nat_value;
  const double frustration_term =
      12.0 * nn * nn * sqrt_k * gc.a_u * gc.a_u * sin_a * sin_a *
      (factor * d0 / (gc.a_l * cos_a * sin_d0) + 4.0 * m * k);
  return drift_term + frustration_term;
}

double predicted_t_star(double e1_initial, double d_inf, double coupling_k) {
  if (!(d_inf > 0.0) || !(d_inf < std::numbers::pi / 2))
    fail(ErrorCode::BadDomain, "D_inf must lie in (0, pi/2)");
  if (!(coupling_k > 0.0)) fail(ErrorCode::BadDomain, "coupling K must be > 0");
  if (!(e1_initial >= 0.0) || !std::isfinite(e1_initial))
    fail(ErrorCode::BadDomain, "initial energy must be finite and >= 0");
  const double threshold = d_inf * d_inf / 8.0;
  if (e1_initial <= threshold) return 0.0;
  return (e1_initial - threshold) /
         (std::sqrt(coupling_k) * d_inf * d_inf / 16.0);
}

FitResult fit_decay_rate(std::span<const double> t, std::span<const double> y,
                         double t_from) {
  if (t.size() != y.size())
    fail(ErrorCode::DimensionMismatch, "t/y length mismatch");
  std::size_t in_window = 0;
  std::vector<double> ts, logs;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_from) continue;
    ++in_window;
    if (y[i] > kDecayFitFloor) {
      ts.push_back(t[i]);
      logs.push_back(std::log(y[i]));
    }
  }
  if (in_window == 0) fail(ErrorCode::TooFewSamples, "no samples at or after t_from");
  if (ts.empty())
    fail(ErrorCode::AlreadyConverged, "all samples below the 1e-13 floor");
  if (ts.size() < 10)
    fail(ErrorCode::TooFewSamples,
         "need at least 10 samples above the floor, have " + std::to_string(ts.size()));

  FitResult out;
  out.samples_used = static_cast<int>(ts.size());
  const bool flat = std::all_of(logs.begin(), logs.end(),
                                [&](double v) { return v == logs.front(); });
  if (flat) {
    out.rate = 0.0;
    out.r_squared = 1.0;
    return out;
  }

  const double n = static_cast<double>(ts.size());
  double mean_t = 0.0, mean_v = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mean_t += ts[i];
    mean_v += logs[i];
  }
  mean_t /= n;
  mean_v /= n;
  double s_tt = 0.0, s_tv = 0.0, s_vv = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double dt = ts[i] - mean_t;
    const double dv = logs[i] - mean_v;
    s_tt += dt * dt;
    s_tv += dt * dv;
    s_vv += dv * dv;
  }
  if (!(s_tt > 0.0)) fail(ErrorCode::TooFewSamples, "degenerate time axis");
  const double slope = s_tv / s_tt;
  out.rate = -slope;
  out.r_squared = (s_vv > 0.0) ? (s_tv * s_tv) / (s_tt * s_vv) : 1.0;
  return out;
}

}  // namespace kuranet
