#include "patrolgame/allocation.hpp"

#include <algorithm>
#include <sstream>

#include "patrolgame/error.hpp"
#include "patrolgame/strategy.hpp"

namespace patrolgame {

namespace {

constexpr double kTieTolerance = 1e-12;

}  // namespace

double complete_game_value(std::span<const int> tau) { return solve_equalization(tau); }

double side_game_value(std::span<const int> tau) {
  std::vector<int> halves;
  halves.reserve(tau.size());
  for (int t : tau) halves.push_back(t / 2);
  return solve_equalization(halves);
}

AllocationResult allocate_complete(int n, int budget) {
  if (n < 2) throw PatrolError(ErrorCode::InvalidSpec, "allocation needs n >= 2");
  if (budget <= n || budget >= n * n) {
    std::ostringstream msg;
    msg << "budget " << budget << " outside (" << n << ", " << n * n << ")";
    throw PatrolError(ErrorCode::BudgetOutOfRange, msg.str());
  }
  const int low = budget / n;
  const int r = budget % n;
  std::vector<int> tau(static_cast<std::size_t>(n), low);
  std::fill(tau.begin(), tau.begin() + r, low + 1);

  AllocationResult out;
  out.w = complete_game_value(tau);
  out.mu = 1.0 - out.w;
  out.tau = std::move(tau);
  out.budget = budget;
  return out;
}

SideAllocation allocate_bipartite_side(int n_side, int budget) {
  if (n_side < 1) throw PatrolError(ErrorCode::InvalidSpec, "side size must be >= 1");
  if (budget % 2 != 0) throw PatrolError(ErrorCode::ParityError, "side budget must be even");
  if (budget < 2 * n_side) {
    std::ostringstream msg;
    msg << "side budget " << budget << " below 2 * n_side = " << 2 * n_side;
    throw PatrolError(ErrorCode::BudgetOutOfRange, msg.str());
  }
  const int ceil_share = (budget + n_side - 1) / n_side;
  const int floor_share = budget / n_side;
  const int high = ceil_share % 2 == 0 ? ceil_share : ceil_share + 1;
  const int low = floor_share % 2 == 0 ? floor_share : floor_share - 1;
  int count_high = n_side;
  if (high != low) {
    // budget - n*low is even and at most n*(high - low) by construction.
    count_high = (budget - n_side * low) / (high - low);
  }

  SideAllocation out;
  out.tau.assign(static_cast<std::size_t>(n_side), low);
  std::fill(out.tau.begin(), out.tau.begin() + count_high, high);
  out.budget = budget;
  out.w = side_game_value(out.tau);
  return out;
}

AllocationResult co_optimize_bipartite(int n_p, int n_q, int budget) {
  if (n_p < 1 || n_q < 1) throw PatrolError(ErrorCode::InvalidSpec, "sides must be >= 1");
  if (budget % 2 != 0) throw PatrolError(ErrorCode::ParityError, "total budget must be even");
  const int lo = 2 * (n_p + n_q);
  const int hi = 2 * (n_p * n_p + n_q * n_q);
  if (budget <= lo || budget >= hi) {
    std::ostringstream msg;
    msg << "budget " << budget << " outside (" << lo << ", " << hi << ")";
    throw PatrolError(ErrorCode::BudgetOutOfRange, msg.str());
  }

  AllocationResult out;
  out.budget = budget;
  int lower = 2 * n_p;
  int upper = budget - 2 * n_q;
  while (upper - lower > 2) {
    int budget_p = (lower + upper) / 2;
    if (budget_p % 2 != 0) ++budget_p;
    const double w_p = allocate_bipartite_side(n_p, budget_p).w;
    const double w_q = allocate_bipartite_side(n_q, budget - budget_p).w;
    out.probes.push_back({budget_p, w_p, w_q});
    if (w_p < w_q)
      upper = budget_p;
    else
      lower = budget_p;
  }

  auto evaluate = [&](int budget_p) {
    return std::pair{allocate_bipartite_side(n_p, budget_p),
                     allocate_bipartite_side(n_q, budget - budget_p)};
  };
  auto best = evaluate(lower);
  if (upper != lower) {
    auto other = evaluate(upper);
    const double w_lower = std::max(best.first.w, best.second.w);
    const double w_upper = std::max(other.first.w, other.second.w);
    // Ties go to the smaller B_p.
    if (w_upper < w_lower - kTieTolerance) best = std::move(other);
  }

  out.side_p = std::move(best.first);
  out.side_q = std::move(best.second);
  out.w = std::max(out.side_p->w, out.side_q->w);
  out.mu = 1.0 - out.w;
  out.tau = out.side_p->tau;
  out.tau.insert(out.tau.end(), out.side_q->tau.begin(), out.side_q->tau.end());
  return out;
}

BalancingTrace pairwise_balance(std::vector<int> tau, int step) {
  if (step != 1 && step != 2) throw PatrolError(ErrorCode::InvalidSpec, "step must be 1 or 2");
  if (tau.empty()) throw PatrolError(ErrorCode::InvalidStart, "empty allocation");
  for (int t : tau) {
    if (step == 1 && t < 1)
      throw PatrolError(ErrorCode::InvalidStart, "entries must be >= 1");
    if (step == 2 && (t < 2 || t % 2 != 0))
      throw PatrolError(ErrorCode::InvalidStart, "entries must be even and >= 2");
  }
  auto value = [step](const std::vector<int>& v) {
    return step == 1 ? complete_game_value(v) : side_game_value(v);
  };

  BalancingTrace trace;
  trace.push_back({tau, value(tau)});
  while (true) {
    auto [lo_it, hi_it] = std::minmax_element(tau.begin(), tau.end());
    if (*hi_it - *lo_it <= step) break;
    *hi_it -= step;
    *lo_it += step;
    trace.push_back({tau, value(tau)});
  }
  return trace;
}

AllocationResult uniform_complete_allocation(int n, int budget) {
  if (n < 1 || budget < n) throw PatrolError(ErrorCode::BudgetOutOfRange, "budget below n");
  AllocationResult out;
  out.tau.assign(static_cast<std::size_t>(n), budget / n);
  out.budget = budget;
  out.w = complete_game_value(out.tau);
  out.mu = 1.0 - out.w;
  return out;
}

AllocationResult uniform_bipartite_allocation(int n_p, int n_q, int budget) {
  const int n = n_p + n_q;
  int share = budget / n;
  if (share % 2 != 0) --share;
  if (share < 2) throw PatrolError(ErrorCode::BudgetOutOfRange, "budget below 2 per node");
  AllocationResult out;
  out.budget = budget;
  out.side_p = SideAllocation{std::vector<int>(static_cast<std::size_t>(n_p), share),
                              n_p * share, 0.0};
  out.side_q = SideAllocation{std::vector<int>(static_cast<std::size_t>(n_q), share),
                              n_q * share, 0.0};
  out.side_p->w = side_game_value(out.side_p->tau);
  out.side_q->w = side_game_value(out.side_q->tau);
  out.w = std::max(out.side_p->w, out.side_q->w);
  out.mu = 1.0 - out.w;
  out.tau.assign(static_cast<std::size_t>(n), share);
  return out;
}

}  // namespace patrolgame
