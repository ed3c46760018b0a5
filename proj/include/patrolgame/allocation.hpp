#pragma once

#include <optional>
#include <span>
#include <vector>

namespace patrolgame {

/// Attack durations assigned to one side of a bipartite graph.
struct SideAllocation {
  std::vector<int> tau;  // non-increasing, all even
  int budget = 0;
  double w = 0.0;
};

/// One probe of the modified bisection over the P-side sub-budget.
struct SplitProbe {
  int budget_p = 0;
  double w_p = 0.0;
  double w_q = 0.0;
};

/// Integer defense allocation and the game value it induces under the
/// matching synthesized strategy.
///
/// For complete graphs `tau` is sorted non-increasing. For bipartite graphs
/// `tau` lists side P then side Q (each sorted non-increasing) and w is
/// max(w_p, w_q).
struct AllocationResult {
  std::vector<int> tau;
  int budget = 0;
  double w = 0.0;
  double mu = 0.0;
  std::optional<SideAllocation> side_p;
  std::optional<SideAllocation> side_q;
  std::vector<SplitProbe> probes;  // bisection probes, bipartite only
};

struct BalancingStep {
  std::vector<int> tau;
  double w = 0.0;
};

using BalancingTrace = std::vector<BalancingStep>;

/// w solving sum_i w^(1/tau_i) = n - 1.
double complete_game_value(std::span<const int> tau);

/// w solving sum_i w^(1/floor(tau_i/2)) = n - 1 for one bipartite side.
double side_game_value(std::span<const int> tau);

/// Budget split ceil/floor(B/n); requires n >= 2 and n < B < n^2.
AllocationResult allocate_complete(int n, int budget);

/// Even durations for one bipartite side. Requires an even budget of at
/// least 2 * n_side. The all-2 split at exactly 2 * n_side is accepted.
SideAllocation allocate_bipartite_side(int n_side, int budget);

/// Modified bisection over the even sub-budget B_p followed by a check of
/// the two surviving candidates. Requires even B with
/// 2(n_p + n_q) < B < 2(n_p^2 + n_q^2).
AllocationResult co_optimize_bipartite(int n_p, int n_q, int budget);

/// Moves `step` units from a largest to a smallest entry until
/// max - min <= step. step = 1 balances a complete graph (entries >= 1),
/// step = 2 a bipartite side (even entries >= 2).
BalancingTrace pairwise_balance(std::vector<int> tau, int step);

/// Equal durations floor(B/n) on every node (rounded down to even for
/// bipartite sides). Used as the comparison point for --compare-uniform;
/// the budget is not necessarily spent in full.
AllocationResult uniform_complete_allocation(int n, int budget);
AllocationResult uniform_bipartite_allocation(int n_p, int n_q, int budget);

}  // namespace patrolgame
