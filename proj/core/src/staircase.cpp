#include "stairbound/staircase.hpp"

#include <algorithm>
#include <string>

#include "stairbound/errors.hpp"

namespace stairbound {

MilestoneSequence make_milestones(std::vector<int> entries, int n) {
  if (entries.size() < 2)
    throw ValidationError("milestone sequence needs at least 2 entries (L >= 1)");
  if (entries.front() != 1)
    throw ValidationError("milestone sequence must start at vertex 1");
  for (int v : entries)
    if (v < 1 || v > n)
      throw ValidationError("milestone " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
  return MilestoneSequence{std::move(entries)};
}

bool is_good(const MilestoneSequence& x) {
  std::vector<int> sorted = x.entries;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

int shared_prefix(const MilestoneSequence& x, const MilestoneSequence& y) {
  if (x.entries.size() != y.entries.size())
    throw ValidationError("shared_prefix: sequence length mismatch");
  int j = 0;
  while (j < static_cast<int>(x.entries.size()) && x.entries[j] == y.entries[j]) ++j;
  return j;
}

int multiplicity(const std::vector<int>& q, int u) {
  return static_cast<int>(std::count(q.begin(), q.end(), u));
}

namespace {

// Walk contribution of one quasi-segment: the stored path, except that a
// degenerate P^{u,u} = (u) contributes (u, u).
std::vector<int> segment_contribution(const Path& p) {
  if (p.vertices.size() == 1) return {p.vertices[0], p.vertices[0]};
  return p.vertices;
}

}  // namespace

bool Staircase::contains(int v) const {
  for (const Path& s : segments)
    if (s.contains(v)) return true;
  return false;
}

Staircase build_staircase(const MilestoneSequence& x, const PathSystem& ps) {
  Staircase s;
  s.milestones = x;
  int L = x.quasi_segments();
  for (int i = 0; i < L; ++i) {
    s.segments.push_back(ps.at(x.entries[i], x.entries[i + 1]));
    auto contrib = segment_contribution(s.segments.back());
    s.walk.insert(s.walk.end(), contrib.begin(), contrib.end());
  }
  return s;
}

std::vector<int> tail(int j, const Staircase& s) {
  int L = static_cast<int>(s.segments.size());
  if (j < 1 || j > L + 1) throw ValidationError("tail: index out of range");
  if (j == L + 1) return {};
  std::vector<int> t;
  for (int i = j - 1; i < L; ++i) {
    auto contrib = segment_contribution(s.segments[i]);
    t.insert(t.end(), contrib.begin(), contrib.end());
  }
  int xj = s.milestones.entries[j - 1];
  auto it = std::find(t.begin(), t.end(), xj);
  if (it != t.end()) t.erase(it);
  return t;
}

HardInstance make_instance(const Graph& g, const PathSystem& ps,
                           const MilestoneSequence& x, std::optional<int> b) {
  if (b && *b != 0 && *b != 1) throw ValidationError("hidden bit must be 0 or 1");
  HardInstance inst;
  inst.graph = g;
  inst.paths = ps;
  inst.milestones = x;
  inst.staircase = build_staircase(x, ps);
  DistanceMatrix dm = distances(g);
  inst.dist_to_one.assign(g.n + 1, 0);
  for (int v = 1; v <= g.n; ++v) inst.dist_to_one[v] = dm(v, 1);
  inst.hidden_bit = b;
  return inst;
}

int HardInstance::f(int v) const {
  int L = static_cast<int>(staircase.segments.size());
  for (int i = L; i >= 1; --i) {
    const Path& seg = staircase.segments[i - 1];
    int pos = seg.first_position(v);
    if (pos > 0) return -i * graph.n - pos;
  }
  return dist_to_one[v];
}

DecoratedValue HardInstance::g(int b, int v) const {
  if (b != 0 && b != 1) throw ValidationError("bit must be 0 or 1");
  DecoratedValue d;
  d.value = f(v);
  d.tag = (v == milestones.final_milestone()) ? b : -1;
  return d;
}

int eval_f(const HardInstance& inst, int v) {
  if (v < 1 || v > inst.graph.n) throw ValidationError("vertex out of range");
  return inst.f(v);
}

DecoratedValue eval_g(const HardInstance& inst, int b, int v) {
  if (v < 1 || v > inst.graph.n) throw ValidationError("vertex out of range");
  return inst.g(b, v);
}

std::vector<int> local_minima(const Graph& g, const std::function<int(int)>& f) {
  std::vector<int> minima;
  for (int v = 1; v <= g.n; ++v) {
    int fv = f(v);
    bool is_min = true;
    for (int u : g.adjacency[v])
      if (fv > f(u)) {
        is_min = false;
        break;
      }
    if (is_min) minima.push_back(v);
  }
  return minima;
}

}  // namespace stairbound
