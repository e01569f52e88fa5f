#include "kuranet/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kuranet/errors.hpp"
#include "kuranet/rng.hpp"

namespace kuranet {

using nlohmann::json;

std::vector<double> VectorSpec::materialize(int n) const {
  if (const auto* list = std::get_if<std::vector<double>>(&source)) {
    if (list->size() != static_cast<std::size_t>(n))
      fail(ErrorCode::ConfigError,
           "explicit vector has length " + std::to_string(list->size()) +
               ", expected " + std::to_string(n));
    return *list;
  }
  const auto& u = std::get<Uniform>(source);
  SplitMix64 rng(u.seed);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = rng.uniform(u.low, u.high);
  return out;
}

namespace {

[[noreturn]] void config_fail(const std::string& what) {
  fail(ErrorCode::ConfigError, what);
}

double require_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number())
    config_fail(where + " needs numeric field '" + key + "'");
  return obj[key].get<double>();
}

std::uint64_t require_seed(const json& obj, const std::string& where) {
  if (!obj.contains("seed") || !obj["seed"].is_number_integer())
    config_fail(where + " needs an explicit integer seed");
  return obj["seed"].get<std::uint64_t>();
}

VectorSpec parse_vector_spec(const json& node, const std::string& where) {
  VectorSpec spec;
  if (node.is_array()) {
    std::vector<double> values;
    for (const auto& v : node) {
      if (!v.is_number()) config_fail(where + " list must contain numbers");
      values.push_back(v.get<double>());
    }
    spec.source = std::move(values);
    return spec;
  }
  if (node.is_object()) {
    if (!node.contains("kind") || node["kind"] != "uniform")
      config_fail(where + " generator kind must be 'uniform'");
    VectorSpec::Uniform u;
    u.low = require_number(node, "low", where);
    u.high = require_number(node, "high", where);
    u.seed = require_seed(node, where);
    if (!(u.low <= u.high)) config_fail(where + " needs low <= high");
    spec.source = u;
    return spec;
  }
  config_fail(where + " must be a list or a {kind:uniform,...} object");
}

GraphSpec parse_graph_spec(const json& node) {
  if (!node.is_object()) config_fail("'graph' must be an object");
  GraphSpec spec;
  if (!node.contains("kind") || !node["kind"].is_string())
    config_fail("graph needs a string 'kind'");
  try {
    spec.kind = parse_graph_kind(node["kind"].get<std::string>());
  } catch (const Error& err) {
    config_fail(err.what());
  }
  if (!node.contains("n") || !node["n"].is_number_integer())
    config_fail("graph needs integer 'n'");
  spec.n = node["n"].get<int>();
  if (node.contains("p")) spec.p = require_number(node, "p", "graph");
  if (node.contains("seed")) spec.seed = require_seed(node, "graph");
  if (node.contains("weight")) spec.weight = require_number(node, "weight", "graph");
  if (node.contains("matrix")) {
    if (!node["matrix"].is_array()) config_fail("graph matrix must be an array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : node["matrix"]) {
      if (!row.is_array()) config_fail("graph matrix rows must be arrays");
      std::vector<double> r;
      for (const auto& v : row) {
        if (!v.is_number()) config_fail("graph matrix entries must be numbers");
        r.push_back(v.get<double>());
      }
      rows.push_back(std::move(r));
    }
    spec.matrix = std::move(rows);
  }
  if (spec.kind == GraphKind::ErdosRenyi && !node.contains("seed"))
    config_fail("erdos_renyi graph needs an explicit integer seed");
  return spec;
}

}  // namespace

RunConfig parse_run_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& err) {
    config_fail(std::string("invalid JSON: ") + err.what());
  }
  if (!root.is_object()) config_fail("top-level config must be an object");

  RunConfig config;
  if (!root.contains("graph")) config_fail("config needs 'graph'");
  config.graph = parse_graph_spec(root["graph"]);

  if (!root.contains("params") || !root["params"].is_object())
    config_fail("config needs 'params' object");
  const json& params = root["params"];
  if (params.contains("m")) config.m = require_number(params, "m", "params");
  if (params.contains("K")) config.coupling_k = require_number(params, "K", "params");
  if (params.contains("alpha"))
    config.alpha = require_number(params, "alpha", "params");
  if (!params.contains("omega_natural"))
    config_fail("params needs 'omega_natural'");
  config.omega_natural = parse_vector_spec(params["omega_natural"], "omega_natural");

  if (!root.contains("initial") || !root["initial"].is_object())
    config_fail("config needs 'initial' object");
  const json& initial = root["initial"];
  if (!initial.contains("theta") || !initial.contains("omega"))
    config_fail("initial needs 'theta' and 'omega'");
  config.theta0 = parse_vector_spec(initial["theta"], "initial.theta");
  config.omega0 = parse_vector_spec(initial["omega"], "initial.omega");

  if (root.contains("integration")) {
    const json& integ = root["integration"];
    if (!integ.is_object()) config_fail("'integration' must be an object");
    config.integration.dt = require_number(integ, "dt", "integration");
    config.integration.t_max = require_number(integ, "t_max", "integration");
    if (integ.contains("sample_every")) {
      if (!integ["sample_every"].is_number_integer())
        config_fail("integration.sample_every must be an integer");
      config.integration.sample_every = integ["sample_every"].get<long long>();
    }
    config.has_integration = true;
  }

  if (root.contains("thresholds")) {
    const json& thr = root["thresholds"];
    if (!thr.is_object()) config_fail("'thresholds' must be an object");
    if (thr.contains("d0")) config.d0 = require_number(thr, "d0", "thresholds");
    if (thr.contains("d_inf"))
      config.d_inf = require_number(thr, "d_inf", "thresholds");
  }

  if (root.contains("k_grid")) {
    const json& kg = root["k_grid"];
    if (!kg.is_object()) config_fail("'k_grid' must be an object");
    KGrid grid;
    grid.k_min = require_number(kg, "k_min", "k_grid");
    grid.factor = require_number(kg, "factor", "k_grid");
    if (!kg.contains("count") || !kg["count"].is_number_integer())
      config_fail("k_grid needs integer 'count'");
    grid.count = kg["count"].get<int>();
    config.k_grid = grid;
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_fail("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config_text(buffer.str());
}

namespace {

Instance build_common(const RunConfig& config) {
  WeightedGraph graph = generate(config.graph);
  validate_in_place(graph);
  const int n = graph.n();

  OscState state0;
  state0.t = 0.0;
  state0.theta = config.theta0.materialize(n);
  state0.omega = config.omega0.materialize(n);

  ModelParams params;
  params.omega_natural = config.omega_natural.materialize(n);
  return Instance{std::move(graph), std::move(params), std::move(state0)};
}

}  // namespace

Instance build_instance(const RunConfig& config) {
  Instance inst = build_common(config);
  if (!config.m || !config.coupling_k || !config.alpha)
    fail(ErrorCode::ConfigError, "params needs explicit 'm', 'K' and 'alpha'");
  inst.params.m = *config.m;
  inst.params.coupling_k = *config.coupling_k;
  inst.params.alpha = *config.alpha;
  inst.params.validate(inst.graph.n());
  inst.state0.validate();
  return inst;
}

Instance build_scan_instance(const RunConfig& config) {
  Instance inst = build_common(config);
  inst.state0.validate();
  return inst;
}

}  // namespace kuranet
