#pragma once

#include <cstdint>
#include <vector>

#include "kuranet/diagnostics.hpp"
#include "kuranet/dynamics.hpp"
#include "kuranet/graph.hpp"

namespace kuranet {

struct IntegrationPlan {
  double dt = 0.0;
  double t_max = 0.0;
  long long sample_every = 1;

  void validate() const;
  long long step_count() const;
};

struct TrajectorySample {
  OscState state;
  DiagSample diag;
};

/// Samples include t = 0 and the final instant; full state is stored so
/// post-hoc analyses need no re-run.
struct Trajectory {
  std::vector<TrajectorySample> samples;

  std::vector<double> times() const;
  std::vector<double> column_d_theta() const;
  std::vector<double> column_d_omega() const;
  std::vector<double> column_e1() const;
  std::vector<double> column_e2() const;
};

/// Classical fixed-step RK4 on (theta-dot, omega-dot) = phase_rhs.
/// Bit-identical output for identical inputs.
Trajectory integrate(const OscState& state0, const ModelParams& params,
                     const WeightedGraph& graph, const IntegrationPlan& plan);

}  // namespace kuranet
