#include "kuranet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "kuranet/errors.hpp"
#include "kuranet/rng.hpp"

namespace kuranet {

WeightedGraph::WeightedGraph(int n, std::vector<double> weights)
    : n_(n), w_(std::move(weights)) {
  if (n_ < 1) fail(ErrorCode::BadOption, "vertex count must be >= 1");
  if (w_.size() != static_cast<std::size_t>(n_) * n_)
    fail(ErrorCode::DimensionMismatch, "weight matrix is not n*n");
  adj_.resize(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (weight(i, j) > 0.0) adj_[i].push_back(j);
}

void validate_in_place(const WeightedGraph& g) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    if (g.weight(i, i) != 0.0)
      fail(ErrorCode::NonzeroDiagonal,
           "a(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") != 0");
    for (int j = i + 1; j < n; ++j) {
      const double wij = g.weight(i, j);
      const double wji = g.weight(j, i);
      if (wij < 0.0 || wji < 0.0)
        fail(ErrorCode::NegativeWeight,
             "negative weight at pair (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")");
      if (wij != wji)
        fail(ErrorCode::AsymmetricWeights,
             "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") != a(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
      if (!std::isfinite(wij))
        fail(ErrorCode::BadOption, "non-finite weight");
    }
  }
}

WeightedGraph validate(int n, const std::vector<std::vector<double>>& weights) {
  if (n < 1) fail(ErrorCode::BadOption, "vertex count must be >= 1");
  if (weights.size() != static_cast<std::size_t>(n))
    fail(ErrorCode::DimensionMismatch, "matrix row count != n");
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : weights) {
    if (row.size() != static_cast<std::size_t>(n))
      fail(ErrorCode::DimensionMismatch, "matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  WeightedGraph g(n, std::move(flat));
  validate_in_place(g);
  return g;
}

std::vector<int> bfs_hops(const WeightedGraph& g, int source) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

bool is_connected(const WeightedGraph& g) {
  const auto dist = bfs_hops(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

GraphConstants constants(const WeightedGraph& g) {
  const int n = g.n();
  GraphConstants gc;
  gc.a_l = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = g.weight(i, j);
      if (w > 0.0) {
        ++gc.card_e;
        gc.a_u = std::max(gc.a_u, w);
        gc.a_l = std::min(gc.a_l, w);
      }
    }
  }
  if (gc.card_e == 0) fail(ErrorCode::NoEdges, "graph has no edges");

  for (int i = 0; i < n; ++i) {
    const auto dist = bfs_hops(g, i);
    for (int j = 0; j < n; ++j) {
      if (dist[j] < 0)
        fail(ErrorCode::Disconnected, "r is undefined on a disconnected graph");
      gc.r = std::max(gc.r, dist[j]);
    }
  }

  // Diagonal pairs (i,i) carry zero weight, so they are counted in E^c.
  gc.card_ec = static_cast<long long>(n) * n - gc.card_e;
  gc.lambda1 = 1.0 / (1.0 + static_cast<double>(gc.r) * static_cast<double>(gc.card_ec));
  return gc;
}

GraphKind parse_graph_kind(const std::string& s) {
  if (s == "complete") return GraphKind::Complete;
  if (s == "ring") return GraphKind::Ring;
  if (s == "path") return GraphKind::Path;
  if (s == "erdos_renyi") return GraphKind::ErdosRenyi;
  if (s == "explicit") return GraphKind::Explicit;
  fail(ErrorCode::BadOption, "unknown graph kind '" + s + "'");
}

namespace {

WeightedGraph from_undirected_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                    double w) {
  std::vector<double> flat(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [i, j] : edges) {
    flat[static_cast<std::size_t>(i) * n + j] = w;
    flat[static_cast<std::size_t>(j) * n + i] = w;
  }
  return WeightedGraph(n, std::move(flat));
}

}  // namespace

WeightedGraph generate(const GraphSpec& spec) {
  const int n = spec.n;
  if (n < 1) fail(ErrorCode::BadOption, "vertex count must be >= 1");
  if (!(spec.weight > 0.0)) fail(ErrorCode::BadOption, "edge weight must be > 0");
  const double w = spec.weight;

  switch (spec.kind) {
    case GraphKind::Complete: {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return from_undirected_edges(n, edges, w);
    }
    case GraphKind::Ring: {
      if (n < 2) fail(ErrorCode::BadOption, "ring needs n >= 2");
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (n > 2) edges.emplace_back(n - 1, 0);
      return from_undirected_edges(n, edges, w);
    }
    case GraphKind::Path: {
      if (n < 2) fail(ErrorCode::BadOption, "path needs n >= 2");
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return from_undirected_edges(n, edges, w);
    }
    case GraphKind::ErdosRenyi: {
      if (n < 2) fail(ErrorCode::BadOption, "erdos_renyi needs n >= 2");
      if (!spec.p || !(*spec.p > 0.0) || *spec.p > 1.0)
        fail(ErrorCode::BadOption, "erdos_renyi needs p in (0,1]");
      if (!spec.seed) fail(ErrorCode::BadOption, "erdos_renyi needs an explicit seed");
      SplitMix64 rng(*spec.seed);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < *spec.p) edges.emplace_back(i, j);
        WeightedGraph g = from_undirected_edges(n, edges, w);
        if (is_connected(g)) return g;
      }
      fail(ErrorCode::ConnectivityUnreachable,
           "no connected sample in 1000 attempts (n=" + std::to_string(n) + ")");
    }
    case GraphKind::Explicit: {
      if (!spec.matrix) fail(ErrorCode::BadOption, "explicit graph needs a matrix");
      return validate(n, *spec.matrix);
    }
  }
  fail(ErrorCode::BadOption, "unreachable graph kind");
}

}  // namespace kuranet
