#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "stairbound/routing.hpp"

namespace stairbound {

/// L+1 vertex labels starting at vertex 1; L >= 1 quasi-segments.
struct MilestoneSequence {
  std::vector<int> entries;

  int quasi_segments() const { return static_cast<int>(entries.size()) - 1; }
  int final_milestone() const { return entries.back(); }
};

MilestoneSequence make_milestones(std::vector<int> entries, int n);

/// True iff all L+1 entries are pairwise distinct.
bool is_good(const MilestoneSequence& x);

/// Length of the longest common prefix of two equal-length sequences
/// (between 1 and L+1; both start at vertex 1).
int shared_prefix(const MilestoneSequence& x, const MilestoneSequence& y);

/// Number of times u appears in the sequence q.
int multiplicity(const std::vector<int>& q, int u);

/// Walk obtained by concatenating the quasi-segments of a milestone
/// sequence under a path system. Each segment contributes its full vertex
/// sequence (a degenerate P^{u,u} contributes (u, u) so that it still both
/// starts and ends at its milestone); consecutive segments therefore list
/// their shared milestone twice.
struct Staircase {
  MilestoneSequence milestones;
  std::vector<Path> segments;  // segment i (0-based storage) = P^{x_i, x_{i+1}}
  std::vector<int> walk;

  bool contains(int v) const;
};

Staircase build_staircase(const MilestoneSequence& x, const PathSystem& ps);

/// Suffix walk from milestone j with the first occurrence of x_j removed;
/// empty at j = L+1. 1 <= j <= L+1.
std::vector<int> tail(int j, const Staircase& s);

struct DecoratedValue {
  int value = 0;
  int tag = -1;  // in {-1, 0, 1}; 0/1 only at the final milestone

  bool operator==(const DecoratedValue&) const = default;
};

/// Hard instance: f equals dist(.,1) off the staircase and -i*n - j on it,
/// where i is the maximum segment index containing v and j the (first)
/// position of v in that segment. Evaluation is lazy.
struct HardInstance {
  Graph graph;
  PathSystem paths;
  MilestoneSequence milestones;
  Staircase staircase;
  std::vector<int> dist_to_one;   // dist(v, 1), index v in 1..n
  std::optional<int> hidden_bit;  // b, when the instance is decorated

  int f(int v) const;
  DecoratedValue g(int b, int v) const;
};

HardInstance make_instance(const Graph& g, const PathSystem& ps,
                           const MilestoneSequence& x,
                           std::optional<int> b = {});

int eval_f(const HardInstance& inst, int v);
DecoratedValue eval_g(const HardInstance& inst, int b, int v);

/// Exact set of local minima of f over the graph (f(v) <= f(u) for every
/// neighbor u), ascending.
std::vector<int> local_minima(const Graph& g, const std::function<int(int)>& f);

}  // namespace stairbound
