#include "kuranet/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "kuranet/errors.hpp"

namespace kuranet {

void ModelParams::validate(int n) const {
  if (!(m > 0.0)) fail(ErrorCode::BadDomain, "inertia m must be > 0");
  if (!(coupling_k > 0.0)) fail(ErrorCode::BadDomain, "coupling K must be > 0");
  if (!(alpha > 0.0) || !(alpha < std::numbers::pi / 2))
    fail(ErrorCode::BadDomain, "frustration alpha must lie in (0, pi/2)");
  if (omega_natural.size() != static_cast<std::size_t>(n))
    fail(ErrorCode::DimensionMismatch, "omega_natural length != vertex count");
}

void OscState::validate() const {
  if (theta.empty()) fail(ErrorCode::EmptyVector, "state has no oscillators");
  if (theta.size() != omega.size())
    fail(ErrorCode::DimensionMismatch, "theta and omega lengths differ");
  for (double v : theta)
    if (!std::isfinite(v)) fail(ErrorCode::NonFiniteState, "non-finite theta");
  for (double v : omega)
    if (!std::isfinite(v)) fail(ErrorCode::NonFiniteState, "non-finite omega");
}

void phase_rhs_into(const double* theta, const double* omega, int n,
                    const ModelParams& params, const WeightedGraph& graph,
                    double* dtheta, double* domega) {
  const double k_over_n = params.coupling_k / static_cast<double>(n);
  const double alpha = params.alpha;
  const double inv_m = 1.0 / params.m;
  for (int i = 0; i < n; ++i) {
    double coupling = 0.0;
    for (int l : graph.neighbors(i))
      coupling += graph.weight(i, l) * std::sin(theta[l] - theta[i] + alpha);
    dtheta[i] = omega[i];
    domega[i] = (params.omega_natural[i] - omega[i] + k_over_n * coupling) * inv_m;
  }
}

PhaseRhs phase_rhs(const OscState& state, const ModelParams& params,
                   const WeightedGraph& graph) {
  state.validate();
  const int n = state.n();
  if (graph.n() != n)
    fail(ErrorCode::DimensionMismatch, "graph size != state size");
  params.validate(n);
  PhaseRhs out;
  out.dtheta.resize(n);
  out.domega.resize(n);
  phase_rhs_into(state.theta.data(), state.omega.data(), n, params, graph,
                 out.dtheta.data(), out.domega.data());
  return out;
}

std::vector<double> acceleration(const OscState& state, const ModelParams& params,
                                 const WeightedGraph& graph) {
  return phase_rhs(state, params, graph).domega;
}

std::vector<double> frequency_rhs_expanded(const OscState& state,
                                           const ModelParams& params,
                                           const WeightedGraph& graph,
                                           const std::vector<double>& accel) {
  state.validate();
  const int n = state.n();
  if (graph.n() != n)
    fail(ErrorCode::DimensionMismatch, "graph size != state size");
  if (accel.size() != static_cast<std::size_t>(n))
    fail(ErrorCode::DimensionMismatch, "accel length != state size");
  params.validate(n);

  const double k_over_n = params.coupling_k / static_cast<double>(n);
  const double cos_a = std::cos(params.alpha);
  const double sin_a = std::sin(params.alpha);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    double cos_part = 0.0;
    double sin_part = 0.0;
    for (int l : graph.neighbors(i)) {
      const double a_il = graph.weight(i, l);
      const double d = state.theta[l] - state.theta[i];
      const double dw = state.omega[l] - state.omega[i];
      cos_part += a_il * std::cos(d) * dw;
      sin_part += a_il * std::sin(d) * dw;
    }
    out[i] = (k_over_n * cos_a * cos_part - k_over_n * sin_a * sin_part - accel[i]) /
             params.m;
  }
  return out;
}

}  // namespace kuranet
