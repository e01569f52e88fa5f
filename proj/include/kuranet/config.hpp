#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kuranet/assumptions.hpp"
#include "kuranet/dynamics.hpp"
#include "kuranet/graph.hpp"
#include "kuranet/integrate.hpp"

namespace kuranet {

/// Either an explicit list or a seeded uniform draw. Every generator must
/// carry an explicit seed; ambient entropy is never used.
struct VectorSpec {
  struct Uniform {
    double low = 0.0;
    double high = 0.0;
    std::uint64_t seed = 0;
  };
  std::variant<std::vector<double>, Uniform> source;

  std::vector<double> materialize(int n) const;
};

struct RunConfig {
  GraphSpec graph;
  std::optional<double> m;
  std::optional<double> coupling_k;
  std::optional<double> alpha;
  VectorSpec omega_natural;
  VectorSpec theta0;
  VectorSpec omega0;
  IntegrationPlan integration;
  bool has_integration = false;
  double d0 = 3.0;
  double d_inf = 1.0;
  std::optional<KGrid> k_grid;
};

RunConfig parse_run_config_text(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Assembled model inputs for simulate/check/verify (m, K, alpha required).
struct Instance {
  WeightedGraph graph;
  ModelParams params;
  OscState state0;
};

Instance build_instance(const RunConfig& config);

/// Graph + frequency vector + initial state only (scan derives m/K/alpha).
Instance build_scan_instance(const RunConfig& config);

}  // namespace kuranet
