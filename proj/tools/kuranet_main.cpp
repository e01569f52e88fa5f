#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kuranet/config.hpp"
#include "kuranet/errors.hpp"
#include "kuranet/experiments.hpp"
#include "kuranet/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitVacuous = 4;

kuranet::RunConfig load_or_exit(const std::string& path) {
  try {
    return kuranet::load_run_config(path);
  } catch (const std::exception& err) {
    std::cerr << "config error: " << err.what() << "\n";
    std::exit(kExitConfig);
  }
}

template <typename Fn>
auto build_or_exit(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& err) {
    std::cerr << "config error: " << err.what() << "\n";
    std::exit(kExitConfig);
  }
}

int run_simulate(const std::string& config_path, const std::string& out_path,
                 const std::string& observables) {
  const kuranet::RunConfig config = load_or_exit(config_path);
  const kuranet::ObservablesMode mode =
      build_or_exit([&] { return kuranet::parse_observables_mode(observables); });
  if (!config.has_integration) {
    std::cerr << "config error: simulate needs an 'integration' block\n";
    return kExitConfig;
  }
  const kuranet::Instance inst = build_or_exit([&] { return kuranet::build_instance(config); });
  try {
    const kuranet::Trajectory traj =
        kuranet::integrate(inst.state0, inst.params, inst.graph, config.integration);
    kuranet::atomic_write_text(out_path, kuranet::trajectory_csv(traj, mode));
  } catch (const std::exception& err) {
    std::cerr << "runtime error: " << err.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int run_check(const std::string& config_path) {
  const kuranet::RunConfig config = load_or_exit(config_path);
  const kuranet::Instance inst = build_or_exit([&] { return kuranet::build_instance(config); });
  try {
    const kuranet::AssumptionReport report = kuranet::check_assumption_a(
        inst.state0, inst.params, inst.graph, config.d0, config.d_inf);
    std::cout << kuranet::assumption_report_json(report);
    return report.all_hold ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& err) {
    std::cerr << "runtime error: " << err.what() << "\n";
    return kExitRuntime;
  }
}

int run_verify(const std::string& config_path, const std::string& out_path) {
  const kuranet::RunConfig config = load_or_exit(config_path);
  if (!config.has_integration) {
    std::cerr << "config error: verify needs an 'integration' block\n";
    return kExitConfig;
  }
  const kuranet::Instance inst = build_or_exit([&] { return kuranet::build_instance(config); });

  kuranet::VerifyInputs in;
  in.state0 = inst.state0;
  in.params = inst.params;
  in.plan = config.integration;
  in.d0 = config.d0;
  in.d_inf = config.d_inf;
  try {
    const kuranet::VerifyOutcome outcome = kuranet::verify_theorem(in, inst.graph);
    kuranet::atomic_write_text(out_path,
                               kuranet::verification_report_json(outcome.report));
    if (outcome.report.vacuous) return kExitVacuous;
    return outcome.report.all_checks_ok() ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& err) {
    std::cerr << "runtime error: " << err.what() << "\n";
    return kExitRuntime;
  }
}

int run_scan(const std::string& config_path, const std::string& out_path) {
  const kuranet::RunConfig config = load_or_exit(config_path);
  if (!config.k_grid) {
    std::cerr << "config error: scan needs a 'k_grid' block\n";
    return kExitConfig;
  }
  const kuranet::Instance inst =
      build_or_exit([&] { return kuranet::build_scan_instance(config); });
  try {
    const kuranet::ScanResult result = kuranet::suggest_regime(
        inst.state0, inst.graph, inst.params.omega_natural, config.d0, config.d_inf,
        *config.k_grid);
    kuranet::atomic_write_text(out_path, kuranet::scan_csv(result));
    return result.found ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& err) {
    std::cerr << "runtime error: " << err.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inertial frustrated Kuramoto simulation and verification"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::string observables = "diag";

  auto* simulate = app.add_subcommand("simulate", "Integrate and write a CSV time series");
  simulate->add_option("--config", config_path, "Config JSON")->required();
  simulate->add_option("--out", out_path, "Output CSV path")->required();
  simulate->add_option("--observables", observables, "diag|full");

  auto* check = app.add_subcommand("check", "Evaluate the assumption set");
  check->add_option("--config", config_path, "Config JSON")->required();

  auto* verify = app.add_subcommand("verify", "Run the synchronization verification");
  verify->add_option("--config", config_path, "Config JSON")->required();
  verify->add_option("--out", out_path, "Output report JSON path")->required();

  auto* scan = app.add_subcommand("scan", "Walk the K grid with m = alpha = K^-2");
  scan->add_option("--config", config_path, "Config JSON")->required();
  scan->add_option("--out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (simulate->parsed()) return run_simulate(config_path, out_path, observables);
  if (check->parsed()) return run_check(config_path);
  if (verify->parsed()) return run_verify(config_path, out_path);
  if (scan->parsed()) return run_scan(config_path, out_path);
  return kExitConfig;
}
