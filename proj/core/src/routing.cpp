#include "stairbound/routing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <random>
#include <string>

#include "stairbound/errors.hpp"

namespace stairbound {

bool Path::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int Path::first_position(int v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) return 0;
  return static_cast<int>(it - vertices.begin()) + 1;
}

void validate_path_system(const Graph& g, const PathSystem& ps) {
  if (ps.n != g.n) throw ValidationError("path system size mismatch");
  if (ps.paths.size() != static_cast<std::size_t>(g.n) * g.n)
    throw ValidationError("path system must cover all ordered pairs");
  for (int u = 1; u <= g.n; ++u)
    for (int v = 1; v <= g.n; ++v) {
      const Path& p = ps.at(u, v);
      if (p.vertices.empty()) throw ValidationError("empty path");
      if (p.front() != u || p.back() != v)
        throw ValidationError("path endpoints do not match its pair");
      if (u == v && p.length() != 1)
        throw ValidationError("P^{u,u} must be the single vertex (u)");
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!g.has_edge(p.vertices[i], p.vertices[i + 1]))
          throw ValidationError("non-adjacent consecutive vertices in path");
    }
}

PathSystem shortest_path_system(const Graph& g) {
  PathSystem ps;
  ps.n = g.n;
  ps.paths.resize(static_cast<std::size_t>(g.n) * g.n);
  std::vector<int> parent(g.n + 1), dist(g.n + 1);
  for (int s = 1; s <= g.n; ++s) {
    std::fill(parent.begin(), parent.end(), 0);
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adjacency[u]) {  // ascending label order
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;  // first discoverer is the smallest-label parent
          q.push(w);
        }
      }
    }
    for (int v = 1; v <= g.n; ++v) {
      std::vector<int> seq;
      for (int cur = v; cur != s; cur = parent[cur]) seq.push_back(cur);
      seq.push_back(s);
      std::reverse(seq.begin(), seq.end());
      ps.at(s, v).vertices = std::move(seq);
    }
  }
  return ps;
}

namespace {

std::vector<long> loads_of(const PathSystem& ps) {
  std::vector<long> load(ps.n + 1, 0);
  for (const Path& p : ps.paths)
    for (int v : p.vertices) ++load[v];
  return load;
}

}  // namespace

CongestionReport vertex_congestion(const PathSystem& ps) {
  CongestionReport r;
  r.vertex_load = loads_of(ps);
  for (const Path& p : ps.paths)
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      int u = p.vertices[i], v = p.vertices[i + 1];
      if (u > v) std::swap(u, v);
      ++r.edge_load[{u, v}];
    }
  for (int v = 1; v <= ps.n; ++v) r.g = std::max(r.g, r.vertex_load[v]);
  for (const auto& [e, load] : r.edge_load) r.g_e = std::max(r.g_e, load);
  return r;
}

PathSystem anneal_congestion(const Graph& g, const PathSystem& start,
                             long iterations, std::uint64_t seed) {
  validate_path_system(g, start);
  PathSystem current = start;
  std::vector<long> load = loads_of(current);
  long best_g = *std::max_element(load.begin() + 1, load.end());
  DistanceMatrix dm = distances(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, g.n);

  auto random_shortest = [&](int u, int v) {
    Path p;
    p.vertices.push_back(u);
    int cur = u;
    while (cur != v) {
      std::vector<int> next;
      for (int w : g.adjacency[cur])
        if (dm(w, v) == dm(cur, v) - 1) next.push_back(w);
      cur = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
      p.vertices.push_back(cur);
    }
    return p;
  };

  for (long it = 0; it < iterations; ++it) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    Path candidate;
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      candidate = random_shortest(u, v);
    } else {
      int w = pick(rng);
      if (w == u || w == v) continue;
      Path a = random_shortest(u, w);
      Path b = random_shortest(w, v);
      candidate.vertices = a.vertices;
      candidate.vertices.insert(candidate.vertices.end(), b.vertices.begin() + 1,
                                b.vertices.end());
      std::vector<int> sorted = candidate.vertices;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;  // not simple
    }
    const Path& old = current.at(u, v);
    if (candidate.vertices == old.vertices) continue;
    for (int x : old.vertices) --load[x];
    for (int x : candidate.vertices) ++load[x];
    long new_g = *std::max_element(load.begin() + 1, load.end());
    if (new_g <= best_g) {
      current.at(u, v) = candidate;
      best_g = new_g;
    } else {
      for (int x : candidate.vertices) --load[x];
      for (int x : old.vertices) ++load[x];
    }
  }
  return current;
}

namespace {

void enumerate_simple_paths(const Graph& g, int u, int v, int max_paths,
                            std::vector<Path>& out) {
  std::vector<int> stack{u};
  std::vector<char> used(g.n + 1, 0);
  used[u] = 1;
  std::function<void(int)> dfs = [&](int cur) {
    if (cur == v) {
      if (static_cast<int>(out.size()) >= max_paths)
        throw BudgetError("min_congestion_bruteforce: too many simple paths for a pair");
      out.push_back(Path{stack});
      return;
    }
    for (int w : g.adjacency[cur]) {
      if (used[w]) continue;
      used[w] = 1;
      stack.push_back(w);
      dfs(w);
      stack.pop_back();
      used[w] = 0;
    }
  };
  dfs(u);
}

}  // namespace

BruteforceResult min_congestion_bruteforce(const Graph& g,
                                           const BruteforceOptions& opts) {
  if (g.n > 4)
    throw ValidationError("min_congestion_bruteforce requires n <= 4");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<Path>> candidates;
  for (int u = 1; u <= g.n; ++u)
    for (int v = 1; v <= g.n; ++v) {
      if (u == v) continue;
      pairs.push_back({u, v});
      candidates.emplace_back();
      enumerate_simple_paths(g, u, v, opts.max_paths_per_pair, candidates.back());
    }

  PathSystem best;
  best.n = g.n;
  best.paths.resize(static_cast<std::size_t>(g.n) * g.n);
  for (int u = 1; u <= g.n; ++u) best.at(u, u).vertices = {u};
  long best_g = -1;

  PathSystem work = best;
  std::vector<long> load(g.n + 1, 0);
  for (int u = 1; u <= g.n; ++u) ++load[u];  // P^{u,u} contributions
  long nodes = 0;

  std::function<void(std::size_t)> search = [&](std::size_t idx) {
    if (++nodes > opts.node_budget)
      throw BudgetError("min_congestion_bruteforce: node budget exceeded");
    long cur_max = *std::max_element(load.begin() + 1, load.end());
    if (best_g >= 0 && cur_max >= best_g) return;  // cannot improve
    if (idx == pairs.size()) {
      best_g = cur_max;
      best = work;
      return;
    }
    auto [u, v] = pairs[idx];
    for (const Path& p : candidates[idx]) {
      for (int x : p.vertices) ++load[x];
      work.at(u, v) = p;
      search(idx + 1);
      for (int x : p.vertices) --load[x];
    }
  };
  search(0);
  return {best, best_g};
}

CongestionRatio check_congestion_inequality(const Graph& g, const PathSystem& ps,
                                            std::optional<Rational> beta) {
  CongestionRatio r;
  r.g = vertex_congestion(ps).g;
  r.beta = beta ? *beta : expansion_exact(g);
  if (r.beta <= 0) throw ValidationError("beta must be positive");
  int delta = metrics(g, false).max_degree;
  double ln_n = std::log(static_cast<double>(g.n));
  r.denominator = g.n * ln_n * ln_n * delta / to_double(r.beta);
  r.ratio = static_cast<double>(r.g) / r.denominator;
  return r;
}

}  // namespace stairbound
