#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patrolgame/graph.hpp"
#include "patrolgame/markov.hpp"

namespace patrolgame {

inline constexpr std::int64_t kSearchSpaceLimit = 10'000'000;

/// Ground truth produced by an independent search, compared against a
/// closed-form or synthesized value: gap = |closed_form - best_value| and
/// agreement = gap <= tolerance.
template <class Candidate>
struct OracleReport {
  double best_value = 0.0;
  Candidate best_candidate;
  std::int64_t candidates_examined = 0;
  bool agreement = false;
  double gap = 0.0;
};

/// Best allocation found by enumeration. `sides` holds one sorted
/// (non-increasing) multiset for complete graphs and two for bipartite
/// graphs, with matching `budgets`.
struct AllocationCandidate {
  std::vector<std::vector<int>> sides;
  std::vector<int> budgets;
  double w = 0.0;
  // mu(best split) - mu(best competing split); bipartite only. Zero means the
  // optimal sub-budget is not unique.
  double split_margin = 0.0;
};

/// Number of compositions of `total` into `parts` positive integers,
/// saturating at kSearchSpaceLimit + 1.
std::int64_t composition_count(int total, int parts);

/// Enumerates every composition of the budget (entries >= 1 for Complete,
/// even entries >= 2 per side and every even split for CompleteBipartite)
/// and returns the maximum capture probability. `sizes` is {n} or
/// {n_p, n_q}. The closed-form allocation is compared at `tolerance`.
OracleReport<AllocationCandidate> exhaustive_allocation(Family family, std::span<const int> sizes,
                                                        int budget, double tolerance = 1e-10);

/// Enumeration for a single bipartite side with a fixed even budget,
/// compared against allocate_bipartite_side.
OracleReport<AllocationCandidate> exhaustive_side_allocation(int n_side, int budget,
                                                             double tolerance = 1e-10);

/// Random-restart coordinate hill climbing over strategies supported on the
/// graph's edges. When `reference_mu` is given it is the comparison value
/// for gap/agreement.
OracleReport<TransitionMatrix> local_search_strategy(const GraphTopology& graph,
                                                     const AttackDurations& tau, int restarts,
                                                     std::uint64_t seed,
                                                     std::optional<double> reference_mu = {},
                                                     double tolerance = 1e-6);

struct SuiteEntry {
  std::string instance;
  double expected = 0.0;
  double actual = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteEntry> entries;

  std::size_t passed() const;
  bool all_passed() const { return passed() == entries.size(); }
};

struct BoundSuiteRanges {
  int random_matrices = 500;
  int random_n_max = 6;
  int random_tau_max = 8;
  std::uint64_t seed = 0;
  int complete_n_max = 6;
  int complete_tau_max = 6;
  int allocation_n_max = 8;
  int baseline_side_max = 8;
};

/// Bound sweeps: mu <= min_i pi_i tau_i on random irreducible chains, the
/// certificate chain of the complete and bipartite strategies, w > e^-2 for
/// every complete allocation, and the constant-factor ratios of the uniform
/// bipartite walk.
SuiteReport bound_suite(const BoundSuiteRanges& ranges);

/// Closed-form allocations against enumeration: complete n in
/// [2, complete_n_max] with every B in (n, n^2); bipartite sides and
/// Algorithm-1 splits for n_p, n_q in [2, bipartite_n_max] with every valid
/// even budget.
SuiteReport allocation_oracle_suite(int complete_n_max, int bipartite_n_max,
                                    double tolerance = 1e-10);

/// Synthesized mu against the hitting-time recursion on random instances.
SuiteReport closed_form_suite(int instances, std::uint64_t seed, double tolerance = 1e-9);

/// Simulated P(T_ij <= tau_j) against the recursion, 3-sigma binomial band.
SuiteReport monte_carlo_suite(int instances, std::int64_t trials, std::uint64_t seed);

/// Local search on Star(3) and Star(4) with tau in {2,3,4}^n never beating
/// the synthesized star strategy by more than 1e-6.
SuiteReport star_optimality_suite(int restarts, std::uint64_t seed);

/// Random row-stochastic matrix with full support on the graph's edges.
Matrix random_strategy(const GraphTopology& graph, std::uint64_t seed);

/// Random strongly connected digraph on n nodes: a shuffled Hamiltonian
/// cycle plus extra edges with probability `density`.
GraphTopology random_general_graph(int n, double density, std::uint64_t seed);

}  // namespace patrolgame
