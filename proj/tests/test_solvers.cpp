#include <doctest.h>

#include "stairbound/errors.hpp"
#include "stairbound/solvers.hpp"

using namespace stairbound;

namespace {

HardInstance inst(GraphFamily kind, int n, std::vector<int> entries,
                  std::optional<int> b = {}) {
  Graph g = generate(kind, {.n = n}, 0);
  PathSystem ps = shortest_path_system(g);
  return make_instance(g, ps, make_milestones(std::move(entries), n), b);
}

}  // namespace

TEST_CASE("oracle bookkeeping and mode guards") {
  HardInstance plain = inst(GraphFamily::cycle, 4, {1, 3});
  QueryOracle oracle(plain, QueryOracle::Mode::f_only);
  CHECK(oracle.query_f(2) == -6);
  CHECK(oracle.query_f(2) == -6);
  CHECK(oracle.query_value(4) == 1);
  CHECK(oracle.total_queries() == 3);
  CHECK(oracle.distinct_queries() == 2);
  CHECK(oracle.transcript() == std::vector<int>{2, 2, 4});
  CHECK(oracle.was_queried(2));
  CHECK_FALSE(oracle.was_queried(1));
  CHECK_THROWS_AS(oracle.query_g(2), ValidationError);
  CHECK_THROWS_AS(oracle.query_f(0), ValidationError);
  CHECK_THROWS_AS(QueryOracle(plain, QueryOracle::Mode::decorated),
                  ValidationError);

  HardInstance decorated = inst(GraphFamily::cycle, 4, {1, 3}, 1);
  QueryOracle dec(decorated, QueryOracle::Mode::decorated);
  CHECK(dec.query_g(3) == DecoratedValue{-7, 1});
  CHECK(dec.query_g(2) == DecoratedValue{-6, -1});
  CHECK(dec.query_value(3) == -7);
  CHECK(dec.total_queries() == 3);
}

TEST_CASE("steepest descent walks the staircase downhill") {
  HardInstance c4 = inst(GraphFamily::cycle, 4, {1, 3});
  QueryOracle oracle(c4, QueryOracle::Mode::f_only);
  SolveResult res = steepest_descent(oracle, 1);
  CHECK(res.answer == 3);
  CHECK(res.trace == std::vector<int>{1, 2, 3});
  // 1 + deg per visited vertex, plus a re-query on each of the two moves
  CHECK(res.total_queries == 9);
  CHECK(res.distinct_queries == 4);

  // starting at the minimum costs one probe plus one neighborhood scan
  QueryOracle at_min(c4, QueryOracle::Mode::f_only);
  SolveResult sat = steepest_descent(at_min, 3);
  CHECK(sat.answer == 3);
  CHECK(sat.trace == std::vector<int>{3});
  CHECK(sat.total_queries == 1 + 2);

  CHECK_THROWS_AS(steepest_descent(oracle, 0), ValidationError);
  CHECK_THROWS_AS(steepest_descent(oracle, 5), ValidationError);
}

TEST_CASE("steepest descent finds the final milestone from every start") {
  for (auto kind : {GraphFamily::complete, GraphFamily::cycle, GraphFamily::path}) {
    HardInstance h = inst(kind, 4, {1, 4, 2});
    for (int start = 1; start <= 4; ++start) {
      QueryOracle oracle(h, QueryOracle::Mode::f_only);
      SolveResult res = steepest_descent(oracle, start);
      CHECK(res.answer == 2);
      CHECK(res.trace.front() == start);
      CHECK(res.trace.back() == 2);
    }
  }
}

TEST_CASE("random descent is seed-deterministic and lands at the minimum") {
  HardInstance h = inst(GraphFamily::cycle, 6, {1, 4, 2});
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    QueryOracle a(h, QueryOracle::Mode::f_only);
    QueryOracle b(h, QueryOracle::Mode::f_only);
    SolveResult ra = random_descent(a, 4, seed);
    SolveResult rb = random_descent(b, 4, seed);
    CHECK(ra.answer == 2);
    CHECK(ra.trace == rb.trace);
    CHECK(ra.total_queries == rb.total_queries);
    CHECK(a.transcript() == b.transcript());
    CHECK(ra.total_queries >= 4);
  }
  QueryOracle o(h, QueryOracle::Mode::f_only);
  CHECK_THROWS_AS(random_descent(o, 0, 1), ValidationError);
}

TEST_CASE("decision recovers the hidden bit on every family member") {
  Graph k4 = generate(GraphFamily::complete, {.n = 4}, 0);
  PathSystem ps = shortest_path_system(k4);
  for (int e1 = 1; e1 <= 4; ++e1) {
    for (int e2 = 1; e2 <= 4; ++e2) {
      for (int b = 0; b <= 1; ++b) {
        HardInstance h =
            make_instance(k4, ps, make_milestones({1, e1, e2}, 4), b);
        QueryOracle dec(h, QueryOracle::Mode::decorated);
        SolveResult res = decision_from_search(dec, 1);
        CHECK(res.bit == b);
        CHECK(res.answer == e2);

        // the answer vertex was visited during the search, so deciding
        // costs no extra query on top of the descent
        QueryOracle plain(h, QueryOracle::Mode::decorated);
        SolveResult search = steepest_descent(plain, 1);
        CHECK(res.total_queries == search.total_queries);
      }
    }
  }
}

TEST_CASE("decision requires a decorated oracle") {
  HardInstance h = inst(GraphFamily::cycle, 4, {1, 3});
  QueryOracle oracle(h, QueryOracle::Mode::f_only);
  CHECK_THROWS_AS(decision_from_search(oracle, 1), ValidationError);
}
