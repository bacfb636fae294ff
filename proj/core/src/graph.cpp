#include "stairbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "stairbound/errors.hpp"

namespace stairbound {

bool Graph::has_edge(int u, int v) const {
  const auto& a = adjacency[u];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 1) throw ValidationError("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edge_list) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ValidationError("edge endpoint out of range 1.." + std::to_string(n) +
                            ": (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
  }
  Graph g;
  g.n = n;
  g.edges.assign(seen.begin(), seen.end());
  g.adjacency.assign(n + 1, {});
  for (auto [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());

  // connectivity via BFS from vertex 1
  std::vector<char> visited(n + 1, 0);
  std::queue<int> q;
  q.push(1);
  visited[1] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adjacency[u]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  if (count != n) throw ValidationError("graph is disconnected");
  return g;
}

namespace {

Graph make_from_edges(int n, std::vector<std::pair<int, int>> edges) {
  return build_graph(n, std::move(edges));
}

Graph gen_path(int n) {
  if (n < 1) throw ValidationError("path requires n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return make_from_edges(n, std::move(e));
}

Graph gen_cycle(int n) {
  if (n < 3) throw ValidationError("cycle requires n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n});
  return make_from_edges(n, std::move(e));
}

Graph gen_complete(int n) {
  if (n < 1) throw ValidationError("complete requires n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.push_back({u, v});
  return make_from_edges(n, std::move(e));
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ValidationError("grid requires rows, cols >= 1");
  auto id = [cols](int r, int c) { return (r - 1) * cols + c; };
  std::vector<std::pair<int, int>> e;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) {
      if (c < cols) e.push_back({id(r, c), id(r, c + 1)});
      if (r < rows) e.push_back({id(r, c), id(r + 1, c)});
    }
  return make_from_edges(rows * cols, std::move(e));
}

Graph gen_hypercube(int dim) {
  if (dim < 1) throw ValidationError("hypercube requires dim >= 1");
  if (dim > 20) throw ValidationError("hypercube dimension too large");
  int n = 1 << dim;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b) {
      int w = v ^ (1 << b);
      if (v < w) e.push_back({v + 1, w + 1});
    }
  return make_from_edges(n, std::move(e));
}

Graph gen_random_regular(int n, int degree, int attempts, std::uint64_t seed) {
  if (n < 2 || degree < 1) throw ValidationError("random_regular requires n >= 2, degree >= 1");
  if (degree >= n) throw ValidationError("random_regular requires degree < n");
  if ((static_cast<long>(n) * degree) % 2 != 0)
    throw ValidationError("random_regular requires n*degree even");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * degree);
    for (int v = 1; v <= n; ++v)
      for (int k = 0; k < degree; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> pairs;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) { simple = false; break; }
      if (u > v) std::swap(u, v);
      if (!pairs.insert({u, v}).second) { simple = false; break; }
    }
    if (!simple) continue;
    try {
      return make_from_edges(n, {pairs.begin(), pairs.end()});
    } catch (const ValidationError&) {
      continue;  // disconnected; resample
    }
  }
  throw ValidationError("random_regular: attempt budget exhausted");
}

}  // namespace

Graph generate(GraphFamily family, const FamilyParams& params, std::uint64_t seed) {
  switch (family) {
    case GraphFamily::path: return gen_path(params.n);
    case GraphFamily::cycle: return gen_cycle(params.n);
    case GraphFamily::complete: return gen_complete(params.n);
    case GraphFamily::grid: return gen_grid(params.rows, params.cols);
    case GraphFamily::hypercube: return gen_hypercube(params.dim);
    case GraphFamily::random_regular:
      return gen_random_regular(params.n, params.degree, params.attempts, seed);
  }
  throw ValidationError("unknown graph family");
}

std::optional<GraphFamily> parse_family(const std::string& name) {
  if (name == "path") return GraphFamily::path;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "complete") return GraphFamily::complete;
  if (name == "grid") return GraphFamily::grid;
  if (name == "hypercube") return GraphFamily::hypercube;
  if (name == "random-regular" || name == "random_regular")
    return GraphFamily::random_regular;
  return {};
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::grid: return "grid";
    case GraphFamily::hypercube: return "hypercube";
    case GraphFamily::random_regular: return "random-regular";
  }
  return "?";
}

DistanceMatrix distances(const Graph& g) {
  DistanceMatrix m;
  m.n = g.n;
  m.dist.assign(static_cast<std::size_t>(g.n) * g.n, -1);
  for (int s = 1; s <= g.n; ++s) {
    auto* row = &m.dist[(s - 1) * static_cast<std::size_t>(g.n)];
    row[s - 1] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adjacency[u]) {
        if (row[w - 1] < 0) {
          row[w - 1] = row[u - 1] + 1;
          q.push(w);
        }
      }
    }
  }
  return m;
}

Rational expansion_exact(const Graph& g) {
  if (g.n > 20)
    throw ValidationError("expansion_exact: graph too large for exact enumeration (n <= 20)");
  if (g.n < 2) throw ValidationError("expansion_exact requires n >= 2");
  int n = g.n;
  Rational best;
  bool have = false;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    int size = std::popcount(mask);
    if (2 * size > n) continue;
    long cut = 0;
    for (auto [u, v] : g.edges) {
      bool in_u = (mask >> (u - 1)) & 1u;
      bool in_v = (mask >> (v - 1)) & 1u;
      if (in_u != in_v) ++cut;
    }
    Rational ratio{cut, size};
    if (!have || ratio < best) {
      best = ratio;
      have = true;
    }
  }
  return best;
}

GraphMetrics metrics(const Graph& g, bool compute_expansion) {
  GraphMetrics m;
  int min_deg = g.n;
  for (int v = 1; v <= g.n; ++v) {
    m.max_degree = std::max(m.max_degree, g.degree(v));
    min_deg = std::min(min_deg, g.degree(v));
  }
  m.is_regular = (m.max_degree == min_deg);
  if (compute_expansion) m.expansion = expansion_exact(g);
  return m;
}

BoundReport bound_calculator(int n, long g, std::optional<int> max_degree,
                             std::optional<Rational> beta) {
  if (n < 2) throw ValidationError("bound_calculator requires n >= 2");
  if (g < 1) throw ValidationError("bound_calculator requires g >= 1");
  BoundReport r;
  double dn = static_cast<double>(n);
  double dg = static_cast<double>(g);
  r.congestion_bound = std::pow(dn, 0.75) / std::sqrt(dg);
  r.constant_degree_bound = std::pow(dn, 0.25) / std::sqrt(std::log(dn));
  r.threshold = r.congestion_bound / (8.0 * std::exp(1.0));
  if (max_degree && beta) {
    r.expander_bound = std::sqrt(to_double(*beta)) * std::pow(dn, 0.25) /
                       (std::sqrt(static_cast<double>(*max_degree)) * std::log(dn));
  }
  return r;
}

}  // namespace stairbound
