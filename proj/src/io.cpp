#include "kuranet/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "kuranet/errors.hpp"

namespace kuranet {

using ordered_json = nlohmann::ordered_json;

std::string fmt_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::BadOption, "cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out) fail(ErrorCode::BadOption, "short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

ObservablesMode parse_observables_mode(const std::string& s) {
  if (s == "diag") return ObservablesMode::Diag;
  if (s == "full") return ObservablesMode::Full;
  fail(ErrorCode::BadOption, "observables mode must be 'diag' or 'full'");
}

std::string trajectory_csv(const Trajectory& traj, ObservablesMode mode) {
  std::string out = "t,d_theta,d_omega,e1,e2";
  const int n = traj.samples.empty() ? 0 : traj.samples.front().state.n();
  if (mode == ObservablesMode::Full) {
    for (int i = 1; i <= n; ++i) out += ",theta_" + std::to_string(i);
    for (int i = 1; i <= n; ++i) out += ",omega_" + std::to_string(i);
  }
  out += "\n";
  for (const auto& s : traj.samples) {
    out += fmt_g17(s.diag.t);
    out += ',';
    out += fmt_g17(s.diag.d_theta);
    out += ',';
    out += fmt_g17(s.diag.d_omega);
    out += ',';
    out += fmt_g17(s.diag.e1);
    out += ',';
    out += fmt_g17(s.diag.e2);
    if (mode == ObservablesMode::Full) {
      for (double v : s.state.theta) {
        out += ',';
        out += fmt_g17(v);
      }
      for (double v : s.state.omega) {
        out += ',';
        out += fmt_g17(v);
      }
    }
    out += '\n';
  }
  return out;
}

std::string scan_csv(const ScanResult& scan) {
  std::string out = "K,m,alpha,all_hold,c1,c2,c3,c4,c5,c6,margin_min\n";
  for (const auto& row : scan.rows) {
    out += fmt_g17(row.coupling_k);
    out += ',';
    out += fmt_g17(row.m);
    out += ',';
    out += fmt_g17(row.alpha);
    out += ',';
    out += row.all_hold ? '1' : '0';
    for (bool holds : row.condition_holds) {
      out += ',';
      out += holds ? '1' : '0';
    }
    out += ',';
    out += fmt_g17(row.margin_min);
    out += '\n';
  }
  return out;
}

namespace {

ordered_json condition_json(const ConditionRecord& c) {
  return ordered_json{{"id", c.id},
                      {"description", c.description},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"holds", c.holds},
                      {"margin", c.margin}};
}

ordered_json assumption_json(const AssumptionReport& report) {
  ordered_json conditions = ordered_json::array();
  for (const auto& c : report.conditions) conditions.push_back(condition_json(c));
  return ordered_json{{"conditions", std::move(conditions)},
                      {"c1_constant", report.c1},
                      {"e1_initial", report.e1_initial},
                      {"t_star", report.t_star},
                      {"all_hold", report.all_hold},
                      {"ec_convention", report.ec_convention}};
}

}  // namespace

std::string assumption_report_json(const AssumptionReport& report) {
  return assumption_json(report).dump(2) + "\n";
}

std::string verification_report_json(const VerificationReport& report) {
  ordered_json fitted{{"rate", nullptr},
                      {"r_squared", nullptr},
                      {"threshold", report.fitted_rate.threshold},
                      {"meets_bound", report.fitted_rate.meets_bound},
                      {"samples_used", report.fitted_rate.samples_used}};
  if (report.fitted_rate.rate) {
    fitted["rate"] = *report.fitted_rate.rate;
    fitted["r_squared"] = report.fitted_rate.r_squared;
  }
  ordered_json doc{
      {"assumption", assumption_json(report.assumption)},
      {"t_star", report.t_star},
      {"vacuous", report.vacuous},
      {"phase_trap_ok", report.phase_trap_ok},
      {"e1_gronwall_ok", report.e1_gronwall_ok},
      {"e2_decay_ok", report.e2_decay_ok},
      {"fitted_rate", std::move(fitted)},
      {"tolerances",
       ordered_json{{"phase_trap_abs", report.tolerances.phase_trap_abs},
                    {"e2_rel", report.tolerances.e2_rel},
                    {"e2_step_coeff", report.tolerances.e2_step_coeff},
                    {"gronwall_rel", report.tolerances.gronwall_rel}}},
      {"dt", report.dt},
      {"t_max", report.t_max},
      {"samples_total", report.samples_total},
      {"samples_after_t_star", report.samples_after_t_star}};
  return doc.dump(2) + "\n";
}

std::string lemma_summary_json(const LemmaSummary& summary) {
  ordered_json doc{{"trials", summary.trials}, {"failures", summary.failures}};
  if (summary.first_counterexample) {
    const Counterexample& ce = *summary.first_counterexample;
    doc["first_counterexample"] =
        ordered_json{{"trial", ce.trial},        {"which", ce.which},
                     {"n", ce.n},                {"weights", ce.weights},
                     {"theta", ce.theta},        {"omega", ce.omega},
                     {"omega_natural", ce.omega_natural},
                     {"m", ce.m},                {"K", ce.coupling_k},
                     {"alpha", ce.alpha}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace kuranet
