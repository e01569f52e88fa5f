#include "kuranet/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kuranet/errors.hpp"

namespace kuranet {

namespace {

struct Clause {
  std::string text;
  double lhs;
  double rhs;
};

/// Strict comparison, no epsilon slack; margins carry the closeness.
ConditionRecord make_condition(std::string id, const std::vector<Clause>& clauses) {
  ConditionRecord rec;
  rec.id = std::move(id);
  rec.holds = true;
  bool first = true;
  for (const auto& c : clauses) {
    const double margin = c.rhs - c.lhs;
    rec.holds = rec.holds && (c.lhs < c.rhs);
    if (first || margin < rec.margin) {
      rec.margin = margin;
      rec.lhs = c.lhs;
      rec.rhs = c.rhs;
      first = false;
    }
    if (!rec.description.empty()) rec.description += " and ";
    rec.description += c.text;
  }
  return rec;
}

}  // namespace

AssumptionReport check_assumption_a(const OscState& state0, const ModelParams& params,
                                    const WeightedGraph& graph, double d0,
                                    double d_inf) {
  state0.validate();
  const int n = state0.n();
  if (graph.n() != n) fail(ErrorCode::DimensionMismatch, "graph size != state size");
  params.validate(n);
  if (!(d0 > 0.0) || !(d0 < std::numbers::pi))
    fail(ErrorCode::BadDomain, "D0 must lie in (0, pi)");
  if (!(d_inf > 0.0) || !(d_inf < std::numbers::pi / 2))
    fail(ErrorCode::BadDomain, "D_inf must lie in (0, pi/2)");

  const GraphConstants gc = constants(graph);  // throws Disconnected
  const double k = params.coupling_k;
  const double m = params.m;
  const double sqrt_k = std::sqrt(k);
  const double cos_a = std::cos(params.alpha);
  const double sin_a = std::sin(params.alpha);
  const double factor = 1.0 + gc.r * static_cast<double>(gc.card_ec);
  const double d_om = d_omega_nat(params.omega_natural);

  AssumptionReport report;
  report.e1_initial = energy_e1(state0, params);
  report.c1 = constant_c1(params, gc, d0, n, d_om);
  report.t_star = predicted_t_star(std::max(report.e1_initial, 0.0), d_inf, k);
  report.ec_convention =
      "complement taken in VxV: diagonal pairs (i,i) are counted in |E^c|";

  report.conditions.push_back(make_condition(
      "c1", {{"E1(0) < D0^2/8", report.e1_initial, d0 * d0 / 8.0},
             {"D_inf < D0", d_inf, d0}}));

  report.conditions.push_back(make_condition(
      "c2",
      {{"sin(alpha) < a_l cos(alpha) cos(D_inf) / (12 a_u (1+r|E^c|) sin(D_inf))",
        sin_a,
        gc.a_l * cos_a * std::cos(d_inf) / (12.0 * gc.a_u * factor * std::sin(d_inf))},
       {"m < 1", m, 1.0}}));

  report.conditions.push_back(make_condition(
      "c3", {{"sqrt(K) > (1+r|E^c|)/(a_l cos(alpha)) * max(D0/sin(D0), 1/cos(D_inf))",
              factor / (gc.a_l * cos_a) *
                  std::max(d0 / std::sin(d0), 1.0 / std::cos(d_inf)),
              sqrt_k}}));

  report.conditions.push_back(make_condition(
      "c4",
      {{"m sqrt(K) < 1/8", m * sqrt_k, 0.125},
       {"m K < a_l/(a_u^2 (1+r|E^c|) cos(alpha)) * min(sin(D0)/(36 D0), cos(D_inf)/24)",
        m * k,
        gc.a_l / (gc.a_u * gc.a_u * factor * cos_a) *
            std::min(std::sin(d0) / (36.0 * d0), std::cos(d_inf) / 24.0)}}));

  report.conditions.push_back(make_condition(
      "c5", {{"K sin(alpha) < 1/(8 a_u sin(D_inf))", k * sin_a,
              1.0 / (8.0 * gc.a_u * std::sin(d_inf))}}));

  report.conditions.push_back(make_condition(
      "c6", {{"C1 < D_inf^2/16", report.c1, d_inf * d_inf / 16.0}}));

  report.all_hold = std::all_of(report.conditions.begin(), report.conditions.end(),
                                [](const ConditionRecord& c) { return c.holds; });
  return report;
}

void KGrid::validate() const {
  if (!(k_min >= 1.0)) fail(ErrorCode::BadDomain, "k_min must be >= 1");
  if (!(factor > 1.0)) fail(ErrorCode::BadDomain, "grid factor must be > 1");
  if (count < 1) fail(ErrorCode::BadDomain, "grid count must be >= 1");
  if (count > 100000) fail(ErrorCode::BadDomain, "grid count too large");
}

ScanResult suggest_regime(const OscState& state0, const WeightedGraph& graph,
                          const std::vector<double>& omega_natural, double d0,
                          double d_inf, const KGrid& grid) {
  grid.validate();
  ScanResult result;
  double k = grid.k_min;
  for (int idx = 0; idx < grid.count; ++idx, k *= grid.factor) {
    ModelParams params;
    params.coupling_k = k;
    params.m = 1.0 / (k * k);
    params.alpha = 1.0 / (k * k);
    params.omega_natural = omega_natural;

    const AssumptionReport report = check_assumption_a(state0, params, graph, d0, d_inf);

    ScanRow row;
    row.coupling_k = k;
    row.m = params.m;
    row.alpha = params.alpha;
    row.all_hold = report.all_hold;
    row.margin_min = report.conditions.front().margin;
    for (std::size_t c = 0; c < 6; ++c) {
      row.condition_holds[c] = report.conditions[c].holds;
      row.margin_min = std::min(row.margin_min, report.conditions[c].margin);
    }
    result.rows.push_back(row);

    if (report.all_hold && !result.found) {
      result.found = Regime{k, params.m, params.alpha};
      result.found_report = report;
      break;  // first hit in grid order
    }
    result.last_report = report;
  }
  return result;
}

}  // namespace kuranet
