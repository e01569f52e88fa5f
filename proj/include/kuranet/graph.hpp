#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kuranet {

/// Symmetric nonnegative coupling matrix with zero diagonal.
/// The edge set E is the set of ordered pairs (i,j) with weight(i,j) > 0.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<double> weights);

  int n() const noexcept { return n_; }
  double weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& weights() const noexcept { return w_; }

  /// Indices l with weight(i,l) > 0, ascending.
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }

 private:
  int n_;
  std::vector<double> w_;           // row-major n*n
  std::vector<std::vector<int>> adj_;
};

struct GraphConstants {
  int r = 0;              // max hop distance over vertex pairs
  long long card_e = 0;   // |E|, ordered pairs with positive weight
  long long card_ec = 0;  // |E^c| = n^2 - |E|, diagonal pairs included
  double lambda1 = 0.0;   // 1 / (1 + r * |E^c|)
  double a_u = 0.0;       // max weight over E
  double a_l = 0.0;       // min weight over E
};

/// Rejects asymmetric, negative, or self-loop weights.
WeightedGraph validate(int n, const std::vector<std::vector<double>>& weights);
void validate_in_place(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

/// Hop distances from source over E (weights ignored beyond positivity).
std::vector<int> bfs_hops(const WeightedGraph& g, int source);

GraphConstants constants(const WeightedGraph& g);

enum class GraphKind { Complete, Ring, Path, ErdosRenyi, Explicit };

struct GraphSpec {
  GraphKind kind = GraphKind::Complete;
  int n = 0;
  std::optional<double> p;              // erdos_renyi edge probability
  std::optional<std::uint64_t> seed;    // erdos_renyi
  double weight = 1.0;                  // uniform edge weight
  std::optional<std::vector<std::vector<double>>> matrix;  // explicit
};

GraphKind parse_graph_kind(const std::string& s);

/// Deterministic for a fixed spec; erdos_renyi resamples until connected
/// (at most 1000 attempts, each consuming n*(n-1)/2 draws).
WeightedGraph generate(const GraphSpec& spec);

}  // namespace kuranet
