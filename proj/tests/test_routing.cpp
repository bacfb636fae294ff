#include <doctest.h>

#include <numeric>

#include "stairbound/errors.hpp"
#include "stairbound/routing.hpp"

using namespace stairbound;

namespace {

Graph fam(GraphFamily f, int n) { return generate(f, {.n = n}, 0); }

long total_path_length(const PathSystem& ps) {
  long sum = 0;
  for (const Path& p : ps.paths) sum += p.length();
  return sum;
}

}  // namespace

TEST_CASE("shortest_path_system: examples and determinism") {
  Graph k3 = fam(GraphFamily::complete, 3);
  PathSystem ps = shortest_path_system(k3);
  validate_path_system(k3, ps);
  for (int u = 1; u <= 3; ++u) {
    CHECK(ps.at(u, u).vertices == std::vector<int>{u});
    for (int v = 1; v <= 3; ++v)
      if (u != v) CHECK(ps.at(u, v).vertices == std::vector<int>{u, v});
  }

  Graph p3 = fam(GraphFamily::path, 3);
  CHECK(shortest_path_system(p3).at(1, 3).vertices == std::vector<int>{1, 2, 3});

  // C4 tie between (2,1,4) and (2,3,4) broken by smallest-label parent
  Graph c4 = fam(GraphFamily::cycle, 4);
  PathSystem c4ps = shortest_path_system(c4);
  CHECK(c4ps.at(2, 4).vertices == std::vector<int>{2, 1, 4});
  CHECK(c4ps.at(1, 3).vertices == std::vector<int>{1, 2, 3});
}

TEST_CASE("shortest paths have exact BFS lengths") {
  for (auto g : {fam(GraphFamily::cycle, 6), fam(GraphFamily::complete, 5),
                 generate(GraphFamily::grid, {.rows = 2, .cols = 3}, 0)}) {
    PathSystem ps = shortest_path_system(g);
    DistanceMatrix dm = distances(g);
    for (int u = 1; u <= g.n; ++u)
      for (int v = 1; v <= g.n; ++v)
        CHECK(ps.at(u, v).length() == dm(u, v) + 1);
  }
}

TEST_CASE("vertex_congestion: frozen small values") {
  CHECK(vertex_congestion(shortest_path_system(fam(GraphFamily::complete, 3))).g == 5);

  CongestionReport p3 = vertex_congestion(shortest_path_system(fam(GraphFamily::path, 3)));
  CHECK(p3.g == 7);
  CHECK(p3.vertex_load[2] == 7);  // maximized at the middle vertex

  CHECK(vertex_congestion(shortest_path_system(fam(GraphFamily::path, 2))).g == 3);
}

TEST_CASE("congestion bracket and counting conservation") {
  for (auto g : {fam(GraphFamily::cycle, 5), fam(GraphFamily::complete, 4),
                 fam(GraphFamily::path, 4),
                 generate(GraphFamily::hypercube, {.dim = 3}, 0)}) {
    PathSystem ps = shortest_path_system(g);
    CongestionReport r = vertex_congestion(ps);
    CHECK(r.g >= g.n);
    CHECK(r.g <= static_cast<long>(g.n) * g.n);
    long load_total = std::accumulate(r.vertex_load.begin(), r.vertex_load.end(), 0L);
    CHECK(load_total == total_path_length(ps));
  }
}

TEST_CASE("min_congestion_bruteforce matches the shortest system on tiny graphs") {
  auto k3 = min_congestion_bruteforce(fam(GraphFamily::complete, 3));
  CHECK(k3.g == 5);
  auto p3 = min_congestion_bruteforce(fam(GraphFamily::path, 3));
  CHECK(p3.g == 7);
  auto k2 = min_congestion_bruteforce(fam(GraphFamily::path, 2));
  CHECK(k2.g == 3);

  for (auto g : {fam(GraphFamily::complete, 3), fam(GraphFamily::path, 3),
                 fam(GraphFamily::cycle, 4), fam(GraphFamily::complete, 4)}) {
    auto best = min_congestion_bruteforce(g);
    validate_path_system(g, best.system);
    CHECK(vertex_congestion(best.system).g == best.g);
    CHECK(best.g <= vertex_congestion(shortest_path_system(g)).g);
  }
  CHECK(min_congestion_bruteforce(fam(GraphFamily::complete, 4)).g == 7);

  CHECK_THROWS_AS(min_congestion_bruteforce(fam(GraphFamily::complete, 5)),
                  ValidationError);
  BruteforceOptions tiny;
  tiny.max_paths_per_pair = 1;
  CHECK_THROWS_AS(min_congestion_bruteforce(fam(GraphFamily::complete, 4), tiny),
                  BudgetError);
}

TEST_CASE("anneal_congestion is monotone and seed-deterministic") {
  Graph k3 = fam(GraphFamily::complete, 3);
  PathSystem start = shortest_path_system(k3);
  PathSystem annealed = anneal_congestion(k3, start, 1000, 0);
  CHECK(vertex_congestion(annealed).g == 5);  // already optimal

  Graph c4 = fam(GraphFamily::cycle, 4);
  PathSystem c4start = shortest_path_system(c4);
  PathSystem untouched = anneal_congestion(c4, c4start, 0, 7);
  CHECK(untouched.paths == c4start.paths);

  long g0 = vertex_congestion(c4start).g;
  for (std::uint64_t seed : {7u, 13u, 99u}) {
    PathSystem out = anneal_congestion(c4, c4start, 1000, seed);
    validate_path_system(c4, out);
    CHECK(vertex_congestion(out).g <= g0);
  }
  CHECK(anneal_congestion(c4, c4start, 500, 7).paths ==
        anneal_congestion(c4, c4start, 500, 7).paths);
}

TEST_CASE("check_congestion_inequality reports the Eq-ratio") {
  Graph k4 = fam(GraphFamily::complete, 4);
  CongestionRatio r = check_congestion_inequality(k4, shortest_path_system(k4));
  CHECK(r.g == 7);
  CHECK(r.beta == Rational(2));
  CHECK(r.ratio == doctest::Approx(0.607).epsilon(0.001));

  Graph k2 = fam(GraphFamily::path, 2);
  CongestionRatio r2 = check_congestion_inequality(k2, shortest_path_system(k2));
  CHECK(r2.ratio > 0);

  Graph c4 = fam(GraphFamily::cycle, 4);
  CongestionRatio r3 = check_congestion_inequality(c4, shortest_path_system(c4));
  CHECK(r3.beta == Rational(1));
  CHECK(r3.g == vertex_congestion(shortest_path_system(c4)).g);
}
