#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "patrolgame/graph.hpp"
#include "patrolgame/markov.hpp"

namespace patrolgame {

inline constexpr double kBisectionTolerance = 1e-12;
inline constexpr int kBisectionIterations = 200;

enum class Optimality { Optimal, Heuristic };

std::string to_string(Optimality optimality);

/// A synthesized patrol strategy together with its certificate.
///
/// `w` is the value of the equalization equation and mu = 1 - w. For
/// bipartite and star graphs the per-side values are in `w_p` / `w_q` and
/// w = max(w_p, w_q).
struct StrategyResult {
  TransitionMatrix P;
  StationaryDistribution pi;
  double mu = 0.0;
  double w = 0.0;
  std::optional<double> w_p;
  std::optional<double> w_q;
  double subopt_lb = 0.0;
  Optimality optimality = Optimality::Heuristic;
};

struct BoundReport {
  double stationary_bound = 0.0;  // min_i pi_i tau_i
  double generic_bound = 0.0;     // min{1, tau_max / n}
  std::optional<double> ratio;    // mu / generic_bound, when mu is supplied
};

/// Bisection for g(root) = target with g strictly increasing on [lo, hi].
/// Throws BracketError when target lies outside [g(lo), g(hi)].
double solve_monotone_increasing(const std::function<double(double)>& g, double target,
                                 double lo, double hi, double tol = kBisectionTolerance);

/// Solves sum_i w^(1/m_i) = count - 1 for w in [0, 1). This is the shared
/// equalization equation behind every synthesizer: m_i = tau_i on complete
/// graphs and m_i = floor(tau_i / 2) on a bipartite side. A single term gives
/// w = 0 (the lone node is visited every other step).
double solve_equalization(std::span<const int> exponents);

/// Visit probabilities 1 - w^(1/m_i), normalized to sum to one.
Vector equalized_probabilities(std::span<const int> exponents, double w);

/// Ratio of mu to min{1, tau_max / n}, clamped to [0, 1].
double suboptimality_lower_bound(double mu, const AttackDurations& tau);

StrategyResult synthesize_complete(const AttackDurations& tau);

StrategyResult synthesize_bipartite(const GraphTopology& graph, const AttackDurations& tau_p,
                                    const AttackDurations& tau_q);

/// Center is node 0; tau[0] is the center's duration and does not enter the
/// solution as long as it is at least 2.
StrategyResult synthesize_star(const AttackDurations& tau);

/// Dispatches on the graph family. General graphs are rejected with
/// InvalidSpec.
StrategyResult synthesize(const GraphTopology& graph, const AttackDurations& tau);

struct BaselineResult {
  StrategyResult strategy;
  double ratio = 0.0;     // mu / (tau / n)
  double constant = 0.0;  // 1/3 for odd tau, (1 - 1/e)/2 for even tau
};

/// Uniform cross-partition walk on K_{n_p, n_q} for a scalar attack duration.
BaselineResult uniform_bipartite_baseline(int n_p, int n_q, int tau);

BoundReport capture_upper_bound(const StationaryDistribution& pi, const AttackDurations& tau,
                                std::optional<double> mu = std::nullopt);

}  // namespace patrolgame
