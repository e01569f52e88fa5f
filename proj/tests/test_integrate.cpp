#include "kuranet/integrate.hpp"

#include <cmath>

#include "doctest.h"
#include "kuranet/errors.hpp"
#include "kuranet/rng.hpp"

using namespace kuranet;

namespace {

// Single oscillator, m=1, Omega=0: omega(t) = e^{-t}, theta(t) = theta0 + 1 - e^{-t}.
struct ClosedForm {
  WeightedGraph graph = validate(1, {{0}});
  ModelParams params{1.0, 1.0, 1e-3, {0.0}};
  OscState state0{0.0, {0.0}, {1.0}};
};

double endpoint_error(double dt) {
  ClosedForm cf;
  IntegrationPlan plan{dt, 1.0, 1 << 20};
  const auto traj = integrate(cf.state0, cf.params, cf.graph, plan);
  const double omega_end = traj.samples.back().state.omega[0];
  return std::abs(omega_end - std::exp(-1.0));
}

}  // namespace

TEST_CASE("closed-form single oscillator at t=1") {
  ClosedForm cf;
  IntegrationPlan plan{1e-3, 1.0, 100};
  const auto traj = integrate(cf.state0, cf.params, cf.graph, plan);
  CHECK(traj.samples.front().diag.t == 0.0);
  CHECK(traj.samples.back().state.t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(traj.samples.back().state.omega[0] - std::exp(-1.0)) < 1e-10);
  CHECK(std::abs(traj.samples.back().state.theta[0] - (1.0 - std::exp(-1.0))) < 1e-10);
}

TEST_CASE("one-step run has exactly two samples") {
  ClosedForm cf;
  IntegrationPlan plan{0.5, 0.5, 1};
  const auto traj = integrate(cf.state0, cf.params, cf.graph, plan);
  CHECK(traj.samples.size() == 2);
  CHECK(traj.samples[0].diag.t == 0.0);
  CHECK(traj.samples[1].diag.t == 0.5);
}

TEST_CASE("fourth-order convergence on the closed-form problem") {
  const double e1 = endpoint_error(1e-2);
  const double e2 = endpoint_error(5e-3);
  const double e3 = endpoint_error(2.5e-3);
  const double r1 = std::log2(e1 / e2);
  const double r2 = std::log2(e2 / e3);
  CHECK(r1 >= 3.7);
  CHECK(r1 <= 4.3);
  CHECK(r2 >= 3.7);
  CHECK(r2 <= 4.3);
}

TEST_CASE("self-convergence on a 3-ring against a fine reference") {
  GraphSpec spec{GraphKind::Ring, 3, {}, {}, 1.0, {}};
  const auto graph = generate(spec);
  ModelParams params{0.5, 2.0, 0.3, {0.1, -0.2, 0.05}};
  OscState state0{0.0, {0.4, -0.3, 0.9}, {0.2, 0.0, -0.1}};

  auto endpoint = [&](double dt) {
    IntegrationPlan plan{dt, 1.0, 1 << 20};
    return integrate(state0, params, graph, plan).samples.back().state;
  };
  const auto ref = endpoint(1e-5);
  auto err = [&](double dt) {
    const auto s = endpoint(dt);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(s.theta[i] - ref.theta[i]));
      worst = std::max(worst, std::abs(s.omega[i] - ref.omega[i]));
    }
    return worst;
  };
  const double ratio = err(1e-2) / err(5e-3);
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("bitwise determinism") {
  GraphSpec spec{GraphKind::ErdosRenyi, 6, 0.6, 42, 1.0, {}};
  const auto graph = generate(spec);
  SplitMix64 rng(4242);
  OscState state0;
  ModelParams params;
  state0.theta.resize(6);
  state0.omega.resize(6);
  params.omega_natural.resize(6);
  for (int i = 0; i < 6; ++i) {
    state0.theta[i] = rng.uniform(-1.0, 1.0);
    state0.omega[i] = rng.uniform(-1.0, 1.0);
    params.omega_natural[i] = rng.uniform(-1.0, 1.0);
  }
  params.m = 0.25;
  params.coupling_k = 3.0;
  params.alpha = 0.15;

  IntegrationPlan plan{1e-3, 2.0, 7};
  const auto a = integrate(state0, params, graph, plan);
  const auto b = integrate(state0, params, graph, plan);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    CHECK(a.samples[k].state.theta == b.samples[k].state.theta);
    CHECK(a.samples[k].state.omega == b.samples[k].state.omega);
    CHECK(a.samples[k].diag.e1 == b.samples[k].diag.e1);
    CHECK(a.samples[k].diag.e2 == b.samples[k].diag.e2);
  }
}

TEST_CASE("translation equivariance of the sampled trajectory") {
  GraphSpec spec{GraphKind::Path, 4, {}, {}, 1.0, {}};
  const auto graph = generate(spec);
  ModelParams params{0.4, 1.5, 0.2, {0.3, -0.1, 0.0, 0.2}};
  OscState state0{0.0, {0.1, -0.4, 0.3, 0.0}, {0.0, 0.1, -0.1, 0.05}};
  IntegrationPlan plan{1e-3, 1.0, 50};

  const double shift = 2.75;
  OscState shifted0 = state0;
  for (auto& th : shifted0.theta) th += shift;

  const auto base = integrate(state0, params, graph, plan);
  const auto shifted = integrate(shifted0, params, graph, plan);
  REQUIRE(base.samples.size() == shifted.samples.size());
  for (std::size_t k = 0; k < base.samples.size(); ++k) {
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(shifted.samples[k].state.theta[i] -
                     base.samples[k].state.theta[i] - shift) <= 1e-12);
      CHECK(std::abs(shifted.samples[k].state.omega[i] -
                     base.samples[k].state.omega[i]) <= 1e-12);
    }
    CHECK(shifted.samples[k].diag.d_theta ==
          doctest::Approx(base.samples[k].diag.d_theta).epsilon(1e-12));
  }
}

TEST_CASE("sample times strictly increase and include both endpoints") {
  ClosedForm cf;
  IntegrationPlan plan{1e-3, 0.0123, 7};  // ragged final step
  const auto traj = integrate(cf.state0, cf.params, cf.graph, plan);
  CHECK(traj.samples.front().diag.t == 0.0);
  for (std::size_t k = 1; k < traj.samples.size(); ++k)
    CHECK(traj.samples[k].diag.t > traj.samples[k - 1].diag.t);
  CHECK(traj.samples.back().diag.t >= 0.0123 - 1e-12);
}

TEST_CASE("instability is reported as NonFiniteState with a step index") {
  // dt far beyond the stability interval of the fast mode: dt/m >> 2.8.
  GraphSpec spec{GraphKind::Complete, 2, {}, {}, 1.0, {}};
  const auto graph = generate(spec);
  ModelParams params{1e-4, 1.0, 0.1, {0.5, -0.5}};
  OscState state0{0.0, {0.3, -0.3}, {0.0, 0.0}};
  IntegrationPlan plan{0.1, 50.0, 1};
  try {
    integrate(state0, params, graph, plan);
    FAIL("expected NonFiniteState");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NonFiniteState);
    CHECK(std::string(err.what()).find("step") != std::string::npos);
  }
}

TEST_CASE("plan validation") {
  ClosedForm cf;
  CHECK_THROWS_AS(integrate(cf.state0, cf.params, cf.graph, IntegrationPlan{0.0, 1.0, 1}),
                  Error);
  CHECK_THROWS_AS(integrate(cf.state0, cf.params, cf.graph, IntegrationPlan{0.1, 0.05, 1}),
                  Error);
  CHECK_THROWS_AS(integrate(cf.state0, cf.params, cf.graph, IntegrationPlan{0.1, 1.0, 0}),
                  Error);
}
