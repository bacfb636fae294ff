#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stairbound/staircase.hpp"

namespace stairbound {

/// Identifies one member g_{x,b} of the function family without
/// materializing its values. The decision label of g_{x,b} is b.
struct FunctionLabel {
  MilestoneSequence milestones;
  int b = 0;
};

struct FamilyBudgets {
  long max_labels = 2000;             // full-mode cap on 2 n^L
  long max_rprime_evals = 10'000'000; // full-mode cap on r' evaluations
};

/// Enumerated family of 2 n^L decorated functions for fixed (G, P, L),
/// with per-sequence tables (goodness, f values, tail membership) that back
/// the optimized weight-scheme evaluators.
class InstanceFamily {
 public:
  InstanceFamily(Graph graph, PathSystem paths, int L,
                 FamilyBudgets budgets = {});

  const Graph& graph() const { return graph_; }
  const PathSystem& paths() const { return paths_; }
  int n() const { return graph_.n; }
  int L() const { return L_; }
  long g() const { return g_; }
  bool exact() const { return exact_; }
  const Rational& n_pow_15() const { return n15_; }
  long sequence_count() const { return seq_count_; }
  long label_count() const { return 2 * seq_count_; }
  const FamilyBudgets& budgets() const { return budgets_; }

  /// Labels are ordered by (sequence id, b); index in [0, 2 n^L).
  FunctionLabel label(long index) const;
  long sequence_id(const MilestoneSequence& x) const;
  MilestoneSequence sequence(long id) const;

  bool sequence_good(long id) const { return good_[id] != 0; }
  int f_value(long id, int v) const { return fvals_[id * n() + (v - 1)]; }
  int final_milestone(long id) const { return final_[id]; }
  /// Membership of v in Tail(j, S_x) for j in 1..L+1.
  bool in_tail(long id, int j, int v) const {
    return (tails_[id * (L_ + 1) + (j - 1)] >> (v - 1)) & 1u;
  }
  /// Longest-common-prefix length of two sequences by id, in 1..L+1.
  int shared_prefix_ids(long x, long y) const;
  /// g_{x,b1}(v) != g_{y,b2}(v), assuming b2 = 1 - b1 where it matters.
  bool values_differ(long x, long y, int b1, int b2, int v) const;

  /// Throws BudgetError unless full enumeration fits the configured budgets.
  void require_full_mode() const;

 private:
  Graph graph_;
  PathSystem paths_;
  int L_;
  long g_;
  bool exact_;
  Rational n15_;
  long seq_count_;
  FamilyBudgets budgets_;
  std::vector<std::uint8_t> good_;
  std::vector<int> fvals_;
  std::vector<int> final_;
  std::vector<std::uint32_t> tails_;
  std::vector<std::vector<int>> entries_;  // per-id milestone entries

  // lazy full-mode tables: M and nu are independent of the label's own bit
  mutable std::vector<Rational> m_table_;               // per sequence
  mutable std::vector<Rational> nu_table_;              // seq * n + (v-1)
  mutable bool tables_ready_ = false;

  void ensure_tables() const;
  friend const std::vector<Rational>& m_table(const InstanceFamily&);
  friend const std::vector<Rational>& nu_table(const InstanceFamily&);
};

/// The relation components of the weight scheme, evaluated exactly.
Rational r_star(const FunctionLabel& f1, const FunctionLabel& f2,
                const InstanceFamily& fam);
Rational r(const FunctionLabel& f1, const FunctionLabel& f2,
           const InstanceFamily& fam);
Rational r_prime(const FunctionLabel& f1, const FunctionLabel& f2, int v,
                 const InstanceFamily& fam);

/// Row sums M(F1) = sum_F2 r(F1,F2) and nu(F1,v) = sum_F2 r'(F1,F2,v).
Rational M_value(const FunctionLabel& f1, const InstanceFamily& fam);
Rational nu_value(const FunctionLabel& f1, int v, const InstanceFamily& fam);

/// Number of paths in the system that start at u and contain v.
long num_paths_through(const PathSystem& ps, int u, int v);

struct AdversaryEvaluation {
  Rational min_ratio_squared;
  double bound = 0.0;  // sqrt of min_ratio_squared, display only
  FunctionLabel witness_f1, witness_f2;
  int witness_vertex = 0;
  Rational witness_m1, witness_m2, witness_nu1, witness_nu2;
  Rational m_min, m_max;  // over good labels
  long good_labels = 0;
  long triples = 0;
};

/// Exact minimum of M(F1)M(F2) / (nu(F1,v) nu(F2,v)) over all triples with
/// r(F1,F2) > 0 and differing values at v, compared as exact rationals.
AdversaryEvaluation adversary_bound(const InstanceFamily& fam);

struct SampledEstimate {
  Rational min_ratio_squared;
  double bound = 0.0;  // upper-bound estimate of the true minimum
  FunctionLabel witness_f1, witness_f2;
  int witness_vertex = 0;
  long samples = 0;
  long valid_samples = 0;
  std::uint64_t seed = 0;
};

SampledEstimate sampled_adversary_bound(const InstanceFamily& fam, long samples,
                                        std::uint64_t seed);

struct CheckReport {
  std::string name;
  bool pass = true;
  long checked = 0;
  long violations = 0;
  std::string lhs;     // extremal left side, exact rational string
  std::string rhs;     // corresponding right side
  std::string detail;
};

/// r'(F1,F2,v) * r'(F2,F1,v) >= r^2(F1,F2) on every admissible triple.
CheckReport verify_weight_scheme(const InstanceFamily& fam);
/// v lies in Tail(J, S_x) or Tail(J, S_y) on every admissible triple.
CheckReport verify_tail_membership(const InstanceFamily& fam);
/// M(F1) >= (1/(2e)) L n^{L+1} for every good label (conservative e side).
CheckReport verify_M_lower_bound(const InstanceFamily& fam);
/// sum of r*(F1,.) >= (1/(2e)) (L+1) n^{L+1} for every good label.
CheckReport verify_rstar_sum(const InstanceFamily& fam);
/// Tail-weighted sums and per-index counting bounds for every admissible
/// (F1, v) pair.
CheckReport verify_tail_counts(const InstanceFamily& fam);
/// Case-split upper bounds on nu for every admissible triple; the tight
/// forms require perfect-square n with L = sqrt(n), the additive form any
/// L <= sqrt(n).
CheckReport verify_nu_case_bounds(const InstanceFamily& fam);
/// Product bound on nu(F1,v) nu(F2,v) plus the explicit threshold on the
/// exact adversary minimum (requires g < n^{1.5}).
CheckReport verify_final_chain(const InstanceFamily& fam,
                               const AdversaryEvaluation* eval = nullptr);

std::vector<CheckReport> verify_all(const InstanceFamily& fam);

}  // namespace stairbound
