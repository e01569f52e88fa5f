#pragma once

#include <span>
#include <vector>

#include "kuranet/dynamics.hpp"
#include "kuranet/graph.hpp"

namespace kuranet {

struct DiagSample {
  double t = 0.0;
  double d_theta = 0.0;
  double d_omega = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
};

/// max(x) - min(x).
double diameter(std::span<const double> x);

/// sum_{i,j} |x_i - x_j|^2 over all ordered pairs (i=j terms are zero).
double d_omega_nat(std::span<const double> omega_natural);

/// E1 = 2m sum (dtheta)(domega) + (1 - m sqrt(K)) sum (dtheta)^2 + 2m^2 sum (domega)^2,
/// sums over ordered pairs (i,j) in {1..N}^2 with dtheta = theta_i - theta_j etc.
double energy_e1(const OscState& state, const ModelParams& params);

/// Same quadratic form in (omega, omega-dot); omega-dot comes from the model
/// equation at this state, not from trajectory differencing.
double energy_e2(const OscState& state, const ModelParams& params,
                 const WeightedGraph& graph);

/// Same form given a precomputed omega-dot (avoids re-evaluating the RHS).
double energy_e2_with_accel(const OscState& state, const ModelParams& params,
                            const std::vector<double>& accel);

/// C1 constant of the assumption set; d0 must lie in (0, pi).
double constant_c1(const ModelParams& params, const GraphConstants& gc, double d0,
                   int n, double d_omega_nat_value);

/// Trapping-time prediction: 0 when e1_initial <= d_inf^2/8, otherwise
/// (e1_initial - d_inf^2/8) / (sqrt(K) d_inf^2 / 16).
double predicted_t_star(double e1_initial, double d_inf, double coupling_k);

struct FitResult {
  double rate = 0.0;       // negated OLS slope of ln(y) against t
  double r_squared = 0.0;  // 1.0 when the signal is exactly flat
  int samples_used = 0;
};

inline constexpr double kDecayFitFloor = 1e-13;

/// OLS fit of ln(y) over pairs with t >= t_from and y > 1e-13.
FitResult fit_decay_rate(std::span<const double> t, std::span<const double> y,
                         double t_from);

}  // namespace kuranet
