#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "stairbound/graph.hpp"

namespace stairbound {

/// Nonempty vertex sequence with consecutive vertices adjacent in the host
/// graph. A single vertex is a valid path.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  bool contains(int v) const;
  /// 1-based position of the first occurrence of v, or 0 when absent.
  int first_position(int v) const;

  bool operator==(const Path&) const = default;
};

/// All-pairs path family {P^{u,v}} over ordered pairs, with P^{u,u} = (u).
struct PathSystem {
  int n = 0;
  std::vector<Path> paths;  // (u-1)*n + (v-1)

  const Path& at(int u, int v) const { return paths[(u - 1) * n + (v - 1)]; }
  Path& at(int u, int v) { return paths[(u - 1) * n + (v - 1)]; }
};

/// Checks the PathSystem invariants against its host graph.
void validate_path_system(const Graph& g, const PathSystem& ps);

struct CongestionReport {
  std::vector<long> vertex_load;              // index v in 1..n
  std::map<std::pair<int, int>, long> edge_load;  // keyed (u, v) with u < v
  long g = 0;    // max vertex load
  long g_e = 0;  // max edge load
};

/// Deterministic all-pairs shortest paths: BFS per source with ascending
/// neighbor order, each vertex keeping its smallest-label parent.
PathSystem shortest_path_system(const Graph& g);

/// Exact multiplicity-counted loads across all n^2 paths.
CongestionReport vertex_congestion(const PathSystem& ps);

/// Local search over path replacements: each move swaps one P^{u,v} for a
/// random alternative simple path (random shortest path or detour through one
/// intermediate) and is accepted when the max vertex load does not increase.
PathSystem anneal_congestion(const Graph& g, const PathSystem& start,
                             long iterations, std::uint64_t seed);

struct BruteforceOptions {
  int max_paths_per_pair = 80;
  long node_budget = 50'000'000;
};

struct BruteforceResult {
  PathSystem system;
  long g = 0;
};

/// Exhaustive minimum-congestion search over all simple-path choices per
/// ordered pair (P^{u,u} fixed), with branch-and-bound pruning. Tiny graphs
/// only (n <= 4) behind a search-space budget.
BruteforceResult min_congestion_bruteforce(const Graph& g,
                                           const BruteforceOptions& opts = {});

struct CongestionRatio {
  long g = 0;
  double denominator = 0.0;  // n * ln^2(n) * Delta / beta
  double ratio = 0.0;
  Rational beta;
};

/// Reports g / (n ln^2(n) Delta / beta) for empirical trend tables.
CongestionRatio check_congestion_inequality(const Graph& g, const PathSystem& ps,
                                            std::optional<Rational> beta = {});

}  // namespace stairbound
