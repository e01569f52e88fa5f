#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kuranet/diagnostics.hpp"
#include "kuranet/dynamics.hpp"
#include "kuranet/graph.hpp"

namespace kuranet {

/// One checked inequality set, normalized to lhs < rhs. Conditions built
/// from two clauses report the clause with the smallest margin.
struct ConditionRecord {
  std::string id;
  std::string description;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin = 0.0;  // rhs - lhs of the binding clause
};

struct AssumptionReport {
  std::vector<ConditionRecord> conditions;  // c1..c6, in order
  double c1 = 0.0;                          // the C1 constant
  double e1_initial = 0.0;
  double t_star = 0.0;
  bool all_hold = false;
  std::string ec_convention;
};

/// Evaluates all six condition records (never short-circuits).
/// d0 must lie in (0, pi) and d_inf in (0, pi/2); d_inf >= d0 is a failed
/// condition, not an error.
AssumptionReport check_assumption_a(const OscState& state0, const ModelParams& params,
                                    const WeightedGraph& graph, double d0,
                                    double d_inf);

struct KGrid {
  double k_min = 1.0;
  double factor = 2.0;
  int count = 1;

  void validate() const;
};

struct Regime {
  double coupling_k = 0.0;
  double m = 0.0;
  double alpha = 0.0;
};

struct ScanRow {
  double coupling_k = 0.0;
  double m = 0.0;
  double alpha = 0.0;
  bool all_hold = false;
  bool condition_holds[6] = {false, false, false, false, false, false};
  double margin_min = 0.0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::optional<Regime> found;                 // first grid point with all_hold
  std::optional<AssumptionReport> found_report;
  std::optional<AssumptionReport> last_report;  // final failing report when not found
};

/// Walks K up the grid with m = alpha = K^-2; E1(0) is recomputed at each
/// grid point since it depends on m and K.
ScanResult suggest_regime(const OscState& state0, const WeightedGraph& graph,
                          const std::vector<double>& omega_natural, double d0,
                          double d_inf, const KGrid& grid);

}  // namespace kuranet
