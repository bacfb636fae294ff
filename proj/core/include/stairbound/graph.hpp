#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stairbound/rational.hpp"

namespace stairbound {

/// Connected undirected graph on vertices 1..n. Edges are stored as
/// (u, v) pairs with u < v, sorted; adjacency lists are sorted ascending.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;  // adjacency[v] for v in 1..n

  const std::vector<int>& neighbors(int v) const { return adjacency[v]; }
  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  bool has_edge(int u, int v) const;
};

/// Validates and finalizes a graph: rejects self-loops, duplicate edges,
/// out-of-range labels, and disconnected inputs.
Graph build_graph(int n, std::vector<std::pair<int, int>> edge_list);

enum class GraphFamily { path, cycle, complete, grid, hypercube, random_regular };

struct FamilyParams {
  int n = 0;        // path, cycle, complete, random_regular
  int rows = 0;     // grid
  int cols = 0;     // grid
  int dim = 0;      // hypercube
  int degree = 0;   // random_regular
  int attempts = 1000;  // random_regular rejection-sampling budget
};

/// Deterministic generator: identical (family, params, seed) give identical
/// edge sets. random_regular uses the pairing model, rejecting multi-edges,
/// self-loops, and disconnected outcomes until the attempt budget runs out.
Graph generate(GraphFamily family, const FamilyParams& params, std::uint64_t seed);

std::optional<GraphFamily> parse_family(const std::string& name);
std::string family_name(GraphFamily family);

/// Exact BFS hop distances for all ordered pairs.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> dist;  // row-major, (u-1)*n + (v-1)

  int operator()(int u, int v) const { return dist[(u - 1) * n + (v - 1)]; }
};

DistanceMatrix distances(const Graph& g);

struct GraphMetrics {
  int max_degree = 0;
  bool is_regular = false;
  std::optional<Rational> expansion;
};

/// Minimum of |E(S, V\S)| / |S| over all S with 0 < |S| <= n/2, as an exact
/// rational. Exhaustive subset enumeration; requires n <= 20.
Rational expansion_exact(const Graph& g);

GraphMetrics metrics(const Graph& g, bool compute_expansion);

/// Numeric evaluation (no asymptotic constants) of the lower-bound
/// expressions, plus the explicit constant-bearing threshold
/// (1/(8e)) * n^{3/4} / sqrt(g). Logs are natural.
struct BoundReport {
  double congestion_bound = 0.0;                 // n^{3/4} / sqrt(g)
  std::optional<double> expander_bound;          // sqrt(beta) n^{1/4} / (sqrt(Delta) ln n)
  double constant_degree_bound = 0.0;            // n^{1/4} / sqrt(ln n)
  double threshold = 0.0;                        // (1/(8e)) n^{3/4} / sqrt(g)
};

BoundReport bound_calculator(int n, long g, std::optional<int> max_degree = {},
                             std::optional<Rational> beta = {});

}  // namespace stairbound
