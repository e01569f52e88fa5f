#include "kuranet/experiments.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "kuranet/errors.hpp"
#include "kuranet/rng.hpp"

namespace kuranet {

long long gronwall_violations(std::span<const double> t, std::span<const double> e1,
                              double coupling_k, double c1, double rel_slack) {
  if (t.size() != e1.size()) fail(ErrorCode::DimensionMismatch, "t/e1 length mismatch");
  const std::size_t m = t.size();
  if (m < 3) return 0;
  const double sqrt_k = std::sqrt(coupling_k);

  // Third-derivative magnitude from divided differences, used to bound the
  // O(h^2) truncation error of the central difference.
  auto third_dd = [&](std::size_t k) -> double {
    if (k < 2 || k + 2 >= m) return 0.0;
    const double h = (t[k + 1] - t[k - 1]) / 2.0;
    if (!(h > 0.0)) return 0.0;
    return std::abs(e1[k + 2] - 2.0 * e1[k + 1] + 2.0 * e1[k - 1] - e1[k - 2]) /
           (2.0 * h * h * h);
  };

  long long violations = 0;
  for (std::size_t k = 1; k + 1 < m; ++k) {
    const double span = t[k + 1] - t[k - 1];
    if (!(span > 0.0)) fail(ErrorCode::BadDomain, "sample times not increasing");
    const double h = span / 2.0;
    const double slope = (e1[k + 1] - e1[k - 1]) / span;
    const double bound = sqrt_k * c1 - sqrt_k * e1[k];

    double d3 = third_dd(k);
    if (k >= 2 && k + 2 < m) {
      d3 = std::max({third_dd(k - 1), d3, third_dd(k + 1)});
    } else if (m >= 5) {
      d3 = third_dd(std::clamp<std::size_t>(k, 2, m - 3));
    }
    const double truncation = h * h / 6.0 * d3;
    const double roundoff =
        4.0 * DBL_EPSILON * (std::abs(e1[k + 1]) + std::abs(e1[k - 1])) / span;
    const double slack = rel_slack * (1.0 + std::abs(e1[k])) +
                         2.0 * (truncation + roundoff);
    if (slope > bound + slack) ++violations;
  }
  return violations;
}

VerifyOutcome verify_theorem(const VerifyInputs& in, const WeightedGraph& graph) {
  in.state0.validate();
  in.plan.validate();
  const AssumptionReport assumption =
      check_assumption_a(in.state0, in.params, graph, in.d0, in.d_inf);
  const double sqrt_k = std::sqrt(in.params.coupling_k);
  const double t_star = assumption.t_star;

  const double required_horizon = t_star + 10.0 / sqrt_k;
  if (in.plan.t_max < required_horizon)
    fail(ErrorCode::HorizonTooShort,
         "t_max " + std::to_string(in.plan.t_max) + " < t_star + 10/sqrt(K) = " +
             std::to_string(required_horizon));

  VerifyOutcome out;
  out.trajectory = integrate(in.state0, in.params, graph, in.plan);
  const Trajectory& traj = out.trajectory;

  VerificationReport& rep = out.report;
  rep.assumption = assumption;
  rep.t_star = t_star;
  rep.vacuous = !assumption.all_hold;
  rep.tolerances = in.tolerances;
  rep.dt = in.plan.dt;
  rep.t_max = in.plan.t_max;
  rep.samples_total = static_cast<long long>(traj.samples.size());

  const auto times = traj.times();
  const auto d_theta = traj.column_d_theta();
  const auto d_omega = traj.column_d_omega();
  const auto e1 = traj.column_e1();
  const auto e2 = traj.column_e2();

  std::size_t anchor = times.size();
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] >= t_star) {
      anchor = k;
      break;
    }
  }
  if (anchor == times.size())
    fail(ErrorCode::HorizonTooShort, "no samples at or after t_star");
  rep.samples_after_t_star = static_cast<long long>(times.size() - anchor);

  rep.phase_trap_ok = true;
  for (std::size_t k = anchor; k < times.size(); ++k)
    if (d_theta[k] > in.d_inf + in.tolerances.phase_trap_abs) {
      rep.phase_trap_ok = false;
      break;
    }

  rep.e1_gronwall_ok = gronwall_violations(times, e1, in.params.coupling_k,
                                           assumption.c1,
                                           in.tolerances.gronwall_rel) == 0;

  // Decay of E2 against the exponential envelope anchored at the first
  // sample past t_star (the differential inequality holds from t_star on,
  // so any later anchor is valid).
  rep.e2_decay_ok = true;
  const double e2_ref = e2[anchor];
  if (e2_ref > 1e-300) {
    for (std::size_t k = anchor; k < times.size(); ++k) {
      const double dt_star = times[k] - times[anchor];
      const double allowance = 1.0 + in.tolerances.e2_rel +
                               in.tolerances.e2_step_coeff * std::pow(in.plan.dt, 4) *
                                   dt_star;
      if (e2[k] > e2_ref * std::exp(-sqrt_k * dt_star) * allowance) {
        rep.e2_decay_ok = false;
        break;
      }
    }
  }

  rep.fitted_rate.threshold = 0.95 * sqrt_k / 2.0;
  try {
    const FitResult fit = fit_decay_rate(times, d_omega, t_star);
    rep.fitted_rate.rate = fit.rate;
    rep.fitted_rate.r_squared = fit.r_squared;
    rep.fitted_rate.samples_used = fit.samples_used;
    rep.fitted_rate.meets_bound = fit.rate >= rep.fitted_rate.threshold;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::AlreadyConverged) {
      // D(omega) never rose above the fit floor: nothing left to decay.
      rep.fitted_rate.meets_bound = true;
    } else {
      throw;
    }
  }
  return out;
}

PairSums pair_sums(const WeightedGraph& graph, std::span<const double> x) {
  const int n = graph.n();
  if (x.size() != static_cast<std::size_t>(n))
    fail(ErrorCode::DimensionMismatch, "vector length != vertex count");
  PairSums sums;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d = x[i] - x[j];
      sums.all += d * d;
      if (graph.weight(i, j) > 0.0) sums.edges += d * d;
    }
  return sums;
}

bool lemma22_holds(const WeightedGraph& graph, double lambda1,
                   std::span<const double> x, double rel_slack) {
  const PairSums sums = pair_sums(graph, x);
  const double scale = std::max({1.0, sums.all, sums.edges});
  return lambda1 * sums.all <= sums.edges + rel_slack * scale &&
         sums.edges <= sums.all + rel_slack * scale;
}

bool energy_lower_bound_holds(double e_value, double s_x, double s_y, double m,
                              double rel_slack) {
  const double rhs = s_x / 8.0 + (2.0 / 3.0) * m * m * s_y;
  const double scale = std::max({1.0, std::abs(e_value), rhs});
  return e_value >= rhs - rel_slack * scale;
}

int thread_cap() {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("KURANET_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) cap = std::min(cap, requested);
  }
  return cap;
}

namespace {

struct TrialInstance {
  WeightedGraph graph;
  OscState state;
  ModelParams params;
};

TrialInstance draw_trial(std::uint64_t trial_seed) {
  SplitMix64 rng(trial_seed);
  const int n = static_cast<int>(rng.uniform_int(2, 8));
  const int kind = static_cast<int>(rng.uniform_int(0, 3));
  const double w = rng.uniform(0.25, 4.0);

  GraphSpec spec;
  spec.n = n;
  spec.weight = w;
  switch (kind) {
    case 0: spec.kind = GraphKind::Complete; break;
    case 1: spec.kind = n >= 2 ? GraphKind::Path : GraphKind::Complete; break;
    case 2: spec.kind = n >= 3 ? GraphKind::Ring : GraphKind::Complete; break;
    default:
      spec.kind = GraphKind::ErdosRenyi;
      spec.p = rng.uniform(0.3, 1.0);
      spec.seed = rng.next_u64();
      break;
  }
  TrialInstance inst{generate(spec), {}, {}};

  inst.state.t = 0.0;
  inst.state.theta.resize(n);
  inst.state.omega.resize(n);
  inst.params.omega_natural.resize(n);
  for (int i = 0; i < n; ++i) inst.state.theta[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < n; ++i) inst.state.omega[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < n; ++i) inst.params.omega_natural[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);

  inst.params.m = rng.uniform(1e-3, 0.999);
  const double sqrt_k = rng.uniform(1e-3, 0.999 / (8.0 * inst.params.m));
  inst.params.coupling_k = sqrt_k * sqrt_k;
  inst.params.alpha = rng.uniform(1e-6, std::numbers::pi / 2 - 1e-6);
  return inst;
}

std::optional<std::string> run_trial(const TrialInstance& inst) {
  constexpr double kSlack = 1e-12;
  const GraphConstants gc = constants(inst.graph);

  if (!lemma22_holds(inst.graph, gc.lambda1, inst.state.theta, kSlack))
    return "lemma 2.2 double inequality (theta vector)";
  if (!lemma22_holds(inst.graph, gc.lambda1, inst.state.omega, kSlack))
    return "lemma 2.2 double inequality (omega vector)";

  const PairSums s_theta = pair_sums(inst.graph, inst.state.theta);
  const PairSums s_omega = pair_sums(inst.graph, inst.state.omega);
  const double e1 = energy_e1(inst.state, inst.params);
  if (!energy_lower_bound_holds(e1, s_theta.all, s_omega.all, inst.params.m, kSlack))
    return "E1 lower bound";

  const auto accel = acceleration(inst.state, inst.params, inst.graph);
  const PairSums s_accel = pair_sums(inst.graph, accel);
  const double e2 = energy_e2_with_accel(inst.state, inst.params, accel);
  if (!energy_lower_bound_holds(e2, s_omega.all, s_accel.all, inst.params.m, kSlack))
    return "E2 lower bound";
  return std::nullopt;
}

Counterexample to_counterexample(long long trial, const std::string& which,
                                 const TrialInstance& inst) {
  Counterexample ce;
  ce.trial = trial;
  ce.which = which;
  ce.n = inst.graph.n();
  ce.weights.resize(ce.n, std::vector<double>(ce.n));
  for (int i = 0; i < ce.n; ++i)
    for (int j = 0; j < ce.n; ++j) ce.weights[i][j] = inst.graph.weight(i, j);
  ce.theta = inst.state.theta;
  ce.omega = inst.state.omega;
  ce.omega_natural = inst.params.omega_natural;
  ce.m = inst.params.m;
  ce.coupling_k = inst.params.coupling_k;
  ce.alpha = inst.params.alpha;
  return ce;
}

}  // namespace

LemmaSummary check_lemma_inequalities(long long trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorCode::BadDomain, "trials must be >= 1");

  const int workers =
      static_cast<int>(std::min<long long>(thread_cap(), std::max<long long>(trials / 64, 1)));

  struct WorkerResult {
    long long failures = 0;
    std::optional<Counterexample> first;
  };
  std::vector<WorkerResult> results(workers);

  auto run_range = [&](int widx, long long lo, long long hi) {
    WorkerResult& res = results[widx];
    for (long long trial = lo; trial < hi; ++trial) {
      const TrialInstance inst = draw_trial(seed + static_cast<std::uint64_t>(trial));
      if (const auto failure = run_trial(inst)) {
        ++res.failures;
        if (!res.first || res.first->trial > trial)
          res.first = to_counterexample(trial, *failure, inst);
      }
    }
  };

  if (workers == 1) {
    run_range(0, 0, trials);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (trials + workers - 1) / workers;
    for (int widx = 0; widx < workers; ++widx) {
      const long long lo = widx * chunk;
      const long long hi = std::min<long long>(trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, widx, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  LemmaSummary summary;
  summary.trials = trials;
  for (const auto& res : results) {
    summary.failures += res.failures;
    if (res.first &&
        (!summary.first_counterexample ||
         summary.first_counterexample->trial > res.first->trial))
      summary.first_counterexample = res.first;
  }
  return summary;
}

}  // namespace kuranet
