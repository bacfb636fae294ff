#include "stairbound/solvers.hpp"

#include <random>

#include "stairbound/errors.hpp"

namespace stairbound {

QueryOracle::QueryOracle(const HardInstance& instance, Mode mode)
    : instance_(&instance), mode_(mode) {
  if (mode == Mode::decorated && !instance.hidden_bit)
    throw ValidationError("decorated oracle needs an instance with a hidden bit");
}

int QueryOracle::query_f(int v) {
  if (v < 1 || v > instance_->graph.n) throw ValidationError("vertex out of range");
  seen_.insert(v);
  transcript_.push_back(v);
  return instance_->f(v);
}

DecoratedValue QueryOracle::query_g(int v) {
  if (mode_ != Mode::decorated)
    throw ValidationError("decorated query on an f-only oracle");
  if (v < 1 || v > instance_->graph.n) throw ValidationError("vertex out of range");
  seen_.insert(v);
  transcript_.push_back(v);
  return instance_->g(*instance_->hidden_bit, v);
}

int QueryOracle::query_value(int v) {
  if (mode_ == Mode::decorated) return query_g(v).value;
  return query_f(v);
}

SolveResult steepest_descent(QueryOracle& oracle, int start) {
  const Graph& g = oracle.instance().graph;
  if (start < 1 || start > g.n) throw ValidationError("start vertex out of range");
  SolveResult res;
  int current = start;
  int current_value = oracle.query_value(current);
  res.trace.push_back(current);
  for (;;) {
    int best = 0, best_value = 0;
    for (int u : g.neighbors(current)) {
      int value = oracle.query_value(u);
      if (best == 0 || value < best_value) {  // ties keep the smaller label
        best = u;
        best_value = value;
      }
    }
    if (best == 0 || best_value >= current_value) break;  // local minimum
    current = best;
    current_value = best_value;
    res.trace.push_back(current);
    oracle.query_value(current);  // the move re-queries the new current vertex
  }
  res.answer = current;
  res.distinct_queries = oracle.distinct_queries();
  res.total_queries = oracle.total_queries();
  return res;
}

SolveResult random_descent(QueryOracle& oracle, long probes, std::uint64_t seed) {
  if (probes < 1) throw ValidationError("random_descent requires probes >= 1");
  const Graph& g = oracle.instance().graph;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, g.n);
  int best = 0, best_value = 0;
  for (long i = 0; i < probes; ++i) {
    int v = pick(rng);
    int value = oracle.query_value(v);
    if (best == 0 || value < best_value || (value == best_value && v < best)) {
      best = v;
      best_value = value;
    }
  }
  SolveResult res = steepest_descent(oracle, best);
  res.distinct_queries = oracle.distinct_queries();
  res.total_queries = oracle.total_queries();
  return res;
}

SolveResult decision_from_search(QueryOracle& oracle, int start) {
  if (oracle.mode() != QueryOracle::Mode::decorated)
    throw ValidationError("decision_from_search needs a decorated oracle");
  const HardInstance& inst = oracle.instance();
  SolveResult res = steepest_descent(oracle, start);
  int found = *res.answer;
  auto minima = local_minima(inst.graph, [&](int v) { return inst.f(v); });
  bool is_min = false;
  for (int m : minima)
    if (m == found) is_min = true;
  if (!is_min)
    throw VerificationError("search returned a vertex that is not a local minimum");
  if (!oracle.was_queried(found)) oracle.query_g(found);
  DecoratedValue d = inst.g(*inst.hidden_bit, found);
  res.bit = d.tag;
  res.distinct_queries = oracle.distinct_queries();
  res.total_queries = oracle.total_queries();
  return res;
}

}  // namespace stairbound
