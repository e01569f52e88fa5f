#include "kuranet/integrate.hpp"

#include <cmath>

#include "kuranet/errors.hpp"

namespace kuranet {

void IntegrationPlan::validate() const {
  if (!(dt > 0.0)) fail(ErrorCode::BadDomain, "dt must be > 0");
  if (!(t_max >= dt)) fail(ErrorCode::BadDomain, "t_max must be >= dt");
  if (sample_every < 1) fail(ErrorCode::BadDomain, "sample_every must be >= 1");
  if (!std::isfinite(t_max / dt))
    fail(ErrorCode::BadDomain, "step count is not finite");
}

long long IntegrationPlan::step_count() const {
  // ceil with a relative guard so t_max = k*dt gives exactly k steps.
  return static_cast<long long>(std::ceil(t_max / dt * (1.0 - 1e-12)));
}

std::vector<double> Trajectory::times() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.diag.t);
  return out;
}

std::vector<double> Trajectory::column_d_theta() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.diag.d_theta);
  return out;
}

std::vector<double> Trajectory::column_d_omega() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.diag.d_omega);
  return out;
}

std::vector<double> Trajectory::column_e1() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.diag.e1);
  return out;
}

std::vector<double> Trajectory::column_e2() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.diag.e2);
  return out;
}

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

DiagSample make_diag(const OscState& state, const ModelParams& params,
                     const WeightedGraph& graph) {
  DiagSample d;
  d.t = state.t;
  d.d_theta = diameter(state.theta);
  d.d_omega = diameter(state.omega);
  d.e1 = energy_e1(state, params);
  d.e2 = energy_e2(state, params, graph);
  return d;
}

}  // namespace

Trajectory integrate(const OscState& state0, const ModelParams& params,
                     const WeightedGraph& graph, const IntegrationPlan& plan) {
  state0.validate();
  plan.validate();
  const int n = state0.n();
  if (graph.n() != n) fail(ErrorCode::DimensionMismatch, "graph size != state size");
  params.validate(n);

  const long long steps = plan.step_count();
  const double dt = plan.dt;

  OscState state = state0;
  state.t = 0.0;

  std::vector<double> k1t(n), k1w(n), k2t(n), k2w(n), k3t(n), k3w(n), k4t(n), k4w(n);
  std::vector<double> tmp_t(n), tmp_w(n);

  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(steps / plan.sample_every) + 2);
  traj.samples.push_back({state, make_diag(state, params, graph)});

  for (long long k = 0; k < steps; ++k) {
    const auto* th = state.theta.data();
    const auto* om = state.omega.data();

    phase_rhs_into(th, om, n, params, graph, k1t.data(), k1w.data());
    for (int i = 0; i < n; ++i) {
      tmp_t[i] = th[i] + 0.5 * dt * k1t[i];
      tmp_w[i] = om[i] + 0.5 * dt * k1w[i];
    }
    phase_rhs_into(tmp_t.data(), tmp_w.data(), n, params, graph, k2t.data(), k2w.data());
    for (int i = 0; i < n; ++i) {
      tmp_t[i] = th[i] + 0.5 * dt * k2t[i];
      tmp_w[i] = om[i] + 0.5 * dt * k2w[i];
    }
    phase_rhs_into(tmp_t.data(), tmp_w.data(), n, params, graph, k3t.data(), k3w.data());
    for (int i = 0; i < n; ++i) {
      tmp_t[i] = th[i] + dt * k3t[i];
      tmp_w[i] = om[i] + dt * k3w[i];
    }
    phase_rhs_into(tmp_t.data(), tmp_w.data(), n, params, graph, k4t.data(), k4w.data());

    for (int i = 0; i < n; ++i) {
      state.theta[i] += dt / 6.0 * (k1t[i] + 2.0 * k2t[i] + 2.0 * k3t[i] + k4t[i]);
      state.omega[i] += dt / 6.0 * (k1w[i] + 2.0 * k2w[i] + 2.0 * k3w[i] + k4w[i]);
    }
    state.t = static_cast<double>(k + 1) * dt;

    if (!all_finite(state.theta) || !all_finite(state.omega))
      fail(ErrorCode::NonFiniteState,
           "non-finite state at step " + std::to_string(k + 1));

    if ((k + 1) % plan.sample_every == 0 || k + 1 == steps)
      traj.samples.push_back({state, make_diag(state, params, graph)});
  }
  return traj;
}

}  // namespace kuranet
