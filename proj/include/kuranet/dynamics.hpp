#pragma once

#include <vector>

#include "kuranet/graph.hpp"

namespace kuranet {

struct ModelParams {
  double m = 0.0;           // inertia, > 0
  double coupling_k = 0.0;  // K, > 0
  double alpha = 0.0;       // frustration, in (0, pi/2)
  std::vector<double> omega_natural;

  void validate(int n) const;
};

/// Phases are unwrapped reals; nothing here reduces mod 2*pi.
struct OscState {
  double t = 0.0;
  std::vector<double> theta;
  std::vector<double> omega;

  int n() const { return static_cast<int>(theta.size()); }
  void validate() const;
};

struct PhaseRhs {
  std::vector<double> dtheta;
  std::vector<double> domega;
};

/// dtheta_i = omega_i
/// domega_i = (Omega_i - omega_i + (K/N) sum_l a_il sin(theta_l - theta_i + alpha)) / m
/// Coupling sums run over ascending l so results are bit-reproducible.
PhaseRhs phase_rhs(const OscState& state, const ModelParams& params,
                   const WeightedGraph& graph);

/// In-place form used by the integrator; writes into dtheta/domega (size n).
void phase_rhs_into(const double* theta, const double* omega, int n,
                    const ModelParams& params, const WeightedGraph& graph,
                    double* dtheta, double* domega);

/// omega-dot at this state; identical to phase_rhs(...).domega.
std::vector<double> acceleration(const OscState& state, const ModelParams& params,
                                 const WeightedGraph& graph);

/// omega-double-dot from the expanded (cos-split) frequency system,
/// given omega-dot at the same state. Diagnostic / cross-check only.
std::vector<double> frequency_rhs_expanded(const OscState& state,
                                           const ModelParams& params,
                                           const WeightedGraph& graph,
                                           const std::vector<double>& accel);

}  // namespace kuranet
