#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kuranet/assumptions.hpp"
#include "kuranet/integrate.hpp"

namespace kuranet {

struct VerifyTolerances {
  double phase_trap_abs = 1e-9;  // absolute slack on D(theta) <= D_inf
  double e2_rel = 1e-6;          // relative slack on the E2 envelope
  double e2_step_coeff = 10.0;   // integration-error allowance, times dt^4 per unit time
  double gronwall_rel = 1e-6;    // relative part of the Gronwall slack
};

struct RateCheck {
  std::optional<double> rate;  // absent when D(omega) sits below the fit floor
  double r_squared = 0.0;
  double threshold = 0.0;      // 0.95 * sqrt(K)/2
  bool meets_bound = false;
  int samples_used = 0;
};

struct VerificationReport {
  AssumptionReport assumption;
  double t_star = 0.0;
  bool vacuous = false;  // assumption does not hold; checks still computed
  bool phase_trap_ok = false;
  bool e1_gronwall_ok = false;
  bool e2_decay_ok = false;
  RateCheck fitted_rate;
  VerifyTolerances tolerances;
  double dt = 0.0;
  double t_max = 0.0;
  long long samples_total = 0;
  long long samples_after_t_star = 0;

  bool all_checks_ok() const {
    return phase_trap_ok && e1_gronwall_ok && e2_decay_ok && fitted_rate.meets_bound;
  }
};

struct VerifyInputs {
  OscState state0;
  ModelParams params;
  IntegrationPlan plan;
  double d0 = 3.0;
  double d_inf = 1.0;
  VerifyTolerances tolerances;
};

struct VerifyOutcome {
  VerificationReport report;
  Trajectory trajectory;
};

/// Requires plan.t_max >= t_star + 10/sqrt(K) (HorizonTooShort otherwise).
VerifyOutcome verify_theorem(const VerifyInputs& in, const WeightedGraph& graph);

/// Gronwall check reused by verify_theorem and by the CSV-level tests:
/// central-difference dE1/dt <= sqrt(K) C1 - sqrt(K) E1 + slack at every
/// interior sample. Returns the number of violations.
long long gronwall_violations(std::span<const double> t, std::span<const double> e1,
                              double coupling_k, double c1, double rel_slack);

struct PairSums {
  double all = 0.0;    // sum over all ordered pairs of (x_i - x_j)^2
  double edges = 0.0;  // restricted to pairs in E
};

PairSums pair_sums(const WeightedGraph& graph, std::span<const double> x);

/// Lambda1 * sum_all <= sum_E <= sum_all, with relative slack.
bool lemma22_holds(const WeightedGraph& graph, double lambda1,
                   std::span<const double> x, double rel_slack);

/// e_value >= sum_x/8 + (2/3) m^2 sum_y, with relative slack.
bool energy_lower_bound_holds(double e_value, double s_x, double s_y, double m,
                              double rel_slack);

struct Counterexample {
  long long trial = 0;
  std::string which;  // failed inequality
  int n = 0;
  std::vector<std::vector<double>> weights;
  std::vector<double> theta, omega, omega_natural;
  double m = 0.0, coupling_k = 0.0, alpha = 0.0;
};

struct LemmaSummary {
  long long trials = 0;
  long long failures = 0;
  std::optional<Counterexample> first_counterexample;
};

/// Property-test driver for the equivalence and energy lower bounds:
/// random connected graphs (n in [2,8]) and random admissible parameters
/// with m sqrt(K) < 1/8. Trials run concurrently (capped by KURANET_THREADS);
/// aggregation is order-independent.
LemmaSummary check_lemma_inequalities(long long trials, std::uint64_t seed);

/// Thread cap: KURANET_THREADS when set, hardware concurrency otherwise.
int thread_cap();

}  // namespace kuranet
