#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "patrolgame/graph.hpp"

namespace patrolgame {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kProbabilityTolerance = 1e-9;

/// Row-stochastic patrol strategy. Construction validates entries in [0,1]
/// and unit row sums; the two-argument form also checks that the support
/// lies on the graph's edges.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(Matrix p);
  TransitionMatrix(Matrix p, const GraphTopology& graph);

  int size() const noexcept { return static_cast<int>(p_.rows()); }
  const Matrix& matrix() const noexcept { return p_; }
  double operator()(int i, int j) const { return p_(i, j); }

 private:
  Matrix p_;
};

struct StationaryDistribution {
  Vector pi;

  int size() const noexcept { return static_cast<int>(pi.size()); }
  double operator[](int i) const { return pi(i); }
};

/// F[k-1] holds F_k, the matrix of first-hitting probabilities at exactly k steps.
struct HittingTimeTensor {
  std::vector<Matrix> F;

  int horizon() const noexcept { return static_cast<int>(F.size()); }
  const Matrix& at(int k) const { return F.at(static_cast<std::size_t>(k - 1)); }
};

struct CaptureReport {
  double mu = 0.0;
  std::pair<int, int> worst_pair{0, 0};
  Matrix cdf;  // cdf(i, j) = P(T_ij <= tau_j)
};

struct SimulationReport {
  Matrix estimates;  // per-pair hit fractions
  double overall = 0.0;
  std::pair<int, int> worst_pair{0, 0};
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Irreducibility of the support digraph {(i, j) : p_ij > 0}.
bool is_irreducible(const TransitionMatrix& p);

StationaryDistribution stationary_distribution(const TransitionMatrix& p);

/// F_1 = P and F_{k+1} = P (F_k - diag(F_k)) for k < k_max.
HittingTimeTensor hitting_time_probabilities(const TransitionMatrix& p, int k_max);

/// Worst-case capture probability against an attacker that picks the
/// agent's current node i and target j (i == j allowed).
CaptureReport capture_probability(const TransitionMatrix& p, const AttackDurations& tau);

/// Monte Carlo estimate of P(T_ij <= tau_j). Each (pair, trial) draws from its
/// own stream keyed by (seed, pair index, trial index), so estimates are
/// independent of thread scheduling.
SimulationReport simulate_capture(const TransitionMatrix& p, const AttackDurations& tau,
                                  std::int64_t trials, std::uint64_t seed);

}  // namespace patrolgame
