#pragma once

#include <string>

#include "kuranet/assumptions.hpp"
#include "kuranet/experiments.hpp"
#include "kuranet/integrate.hpp"

namespace kuranet {

/// Shortest text that round-trips a double exactly (17 significant digits).
std::string fmt_g17(double value);

/// Writes via a temp file in the same directory, then renames.
void atomic_write_text(const std::string& path, const std::string& content);

enum class ObservablesMode { Diag, Full };
ObservablesMode parse_observables_mode(const std::string& s);

/// Header t,d_theta,d_omega,e1,e2; Full mode appends theta_1..theta_N,
/// omega_1..omega_N.
std::string trajectory_csv(const Trajectory& traj, ObservablesMode mode);

/// Header K,m,alpha,all_hold,c1,...,c6,margin_min; one row per grid point.
std::string scan_csv(const ScanResult& scan);

std::string assumption_report_json(const AssumptionReport& report);
std::string verification_report_json(const VerificationReport& report);
std::string lemma_summary_json(const LemmaSummary& summary);

}  // namespace kuranet
