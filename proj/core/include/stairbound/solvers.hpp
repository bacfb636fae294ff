#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "stairbound/staircase.hpp"

namespace stairbound {

/// Query-counting wrapper over a hard instance. Answers are stateless;
/// counters and the transcript are monotone. distinct_queries counts each
/// vertex once, total_queries every issued query.
class QueryOracle {
 public:
  enum class Mode { f_only, decorated };

  QueryOracle(const HardInstance& instance, Mode mode);

  int query_f(int v);
  DecoratedValue query_g(int v);
  /// The f-component regardless of mode (decorated-mode lookups still log
  /// the query and reveal the tag).
  int query_value(int v);

  Mode mode() const { return mode_; }
  const HardInstance& instance() const { return *instance_; }
  long distinct_queries() const { return static_cast<long>(seen_.size()); }
  long total_queries() const { return static_cast<long>(transcript_.size()); }
  const std::vector<int>& transcript() const { return transcript_; }
  bool was_queried(int v) const { return seen_.count(v) > 0; }

 private:
  const HardInstance* instance_;
  Mode mode_;
  std::set<int> seen_;
  std::vector<int> transcript_;
};

struct SolveResult {
  std::optional<int> answer;  // local-minimum vertex, when searching
  std::optional<int> bit;     // recovered hidden bit, when deciding
  long distinct_queries = 0;
  long total_queries = 0;
  std::vector<int> trace;     // visited-vertex sequence
};

/// Queries the current vertex and all neighbors, moves to the strictly
/// smaller neighbor (ties by smallest label), halts at a local minimum.
SolveResult steepest_descent(QueryOracle& oracle, int start);

/// Queries `probes` uniformly random vertices, then descends from the
/// minimum-valued probe. Deterministic given seed.
SolveResult random_descent(QueryOracle& oracle, long probes, std::uint64_t seed);

/// Runs steepest descent on the f-component of a decorated oracle, then
/// reads the tag at the found local minimum (one extra query only if that
/// vertex was never queried). Returns the hidden bit.
SolveResult decision_from_search(QueryOracle& oracle, int start = 1);

}  // namespace stairbound
