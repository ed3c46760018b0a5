#include <gtest/gtest.h>

#include <cmath>

#include "patrolgame/error.hpp"
#include "patrolgame/markov.hpp"
#include "patrolgame/oracles.hpp"
#include "patrolgame/strategy.hpp"

using namespace patrolgame;

namespace {

Matrix two_cycle() {
  Matrix p(2, 2);
  p << 0, 1, 1, 0;
  return p;
}

Matrix rank_one(const Vector& pi) { return Vector::Ones(pi.size()) * pi.transpose(); }

// Bipartite block strategy: P-side rows draw from q, Q-side rows from p.
Matrix bipartite_block(const Vector& p, const Vector& q) {
  const auto np = p.size();
  const auto nq = q.size();
  Matrix m = Matrix::Zero(np + nq, np + nq);
  for (Eigen::Index i = 0; i < np; ++i) m.block(i, np, 1, nq) = q.transpose();
  for (Eigen::Index i = 0; i < nq; ++i) m.block(np + i, 0, 1, np) = p.transpose();
  return m;
}

}  // namespace

TEST(TransitionMatrix, ValidatesRowsAndSupport) {
  Matrix bad(2, 2);
  bad << 0.5, 0.6, 0, 1;
  EXPECT_THROW(TransitionMatrix{bad}, PatrolError);
  Matrix neg(2, 2);
  neg << 1.5, -0.5, 0, 1;
  EXPECT_THROW(TransitionMatrix{neg}, PatrolError);
  Matrix loop(2, 2);
  loop << 0.5, 0.5, 1, 0;
  EXPECT_THROW(TransitionMatrix(loop, GraphTopology::complete_bipartite(1, 1)), PatrolError);
  EXPECT_NO_THROW(TransitionMatrix(two_cycle(), GraphTopology::complete_bipartite(1, 1)));
}

TEST(Stationary, TwoCycle) {
  const auto pi = stationary_distribution(TransitionMatrix(two_cycle()));
  EXPECT_NEAR(pi[0], 0.5, 1e-12);
  EXPECT_NEAR(pi[1], 0.5, 1e-12);
}

TEST(Stationary, RankOneChain) {
  Vector pi0(4);
  pi0 << 0.1, 0.2, 0.3, 0.4;
  const auto pi = stationary_distribution(TransitionMatrix(rank_one(pi0)));
  EXPECT_LT((pi.pi - pi0).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Stationary, BipartiteBlockIsHalfOfSides) {
  Vector p(3), q(2);
  p << 0.5, 0.3, 0.2;
  q << 0.7, 0.3;
  const auto pi = stationary_distribution(TransitionMatrix(bipartite_block(p, q)));
  Vector expected(5);
  expected << p / 2, q / 2;
  EXPECT_LT((pi.pi - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Stationary, ReducibleThrows) {
  Matrix p(2, 2);
  p << 1, 0, 0.5, 0.5;
  try {
    stationary_distribution(TransitionMatrix(p));
    FAIL();
  } catch (const PatrolError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIrreducible);
  }
}

TEST(Stationary, LargeChainUsesIterativePath) {
  const int n = 230;
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    p(i, (i + 1) % n) = 0.6;
    p(i, (i + n - 1) % n) = 0.4;
  }
  const auto pi = stationary_distribution(TransitionMatrix(p));
  for (int i = 0; i < n; ++i) EXPECT_NEAR(pi[i], 1.0 / n, 1e-9);
}

TEST(HittingTimes, TwoCycle) {
  const auto f = hitting_time_probabilities(TransitionMatrix(two_cycle()), 2);
  EXPECT_TRUE(f.at(1).isApprox(two_cycle()));
  EXPECT_TRUE(f.at(2).isApprox(Matrix::Identity(2, 2)));
}

TEST(HittingTimes, RankOneColumnsAreGeometric) {
  Vector pi(3);
  pi << 0.5, 0.3, 0.2;
  const auto f = hitting_time_probabilities(TransitionMatrix(rank_one(pi)), 8);
  for (int k = 1; k <= 8; ++k)
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < 3; ++r)
        EXPECT_NEAR(f.at(k)(r, i), pi(i) * std::pow(1 - pi(i), k - 1), 1e-14);
}

// The P-side rows of column i follow p_i(1-p_i)^(k/2-1) at even k; the Q-side
// rows make the column minimum 0 at every k, so the parity statement is checked
// on the cumulative capture probability instead.
TEST(HittingTimes, BipartiteParityStructure) {
  Vector p(3), q(2);
  p << 0.5, 0.3, 0.2;
  q << 0.6, 0.4;
  const auto f = hitting_time_probabilities(TransitionMatrix(bipartite_block(p, q)), 12);
  for (int i = 0; i < 3; ++i) {
    Vector cdf = Vector::Zero(5);
    double previous_min = 0.0;
    for (int k = 1; k <= 12; ++k) {
      for (int r = 0; r < 3; ++r) {
        const double expected = k % 2 == 0 ? p(i) * std::pow(1 - p(i), k / 2 - 1) : 0.0;
        EXPECT_NEAR(f.at(k)(r, i), expected, 1e-14);
      }
      cdf += f.at(k).col(i);
      const double col_min = cdf.minCoeff();
      EXPECT_NEAR(col_min, 1 - std::pow(1 - p(i), k / 2), 1e-12);
      if (k % 2 == 1) EXPECT_NEAR(col_min, previous_min, 1e-15);
      previous_min = col_min;
    }
  }
}

TEST(HittingTimes, CumulativeColumnsMonotoneAndBounded) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_general_graph(2 + static_cast<int>(seed % 5), 0.5, seed);
    const TransitionMatrix p(random_strategy(g, seed));
    const auto f = hitting_time_probabilities(p, 25);
    Matrix acc = Matrix::Zero(g.size(), g.size());
    for (int k = 1; k <= 25; ++k) {
      const Matrix next = acc + f.at(k);
      EXPECT_GE((next - acc).minCoeff(), 0.0);
      EXPECT_LE(next.maxCoeff(), 1.0 + 1e-9);
      EXPECT_GE(f.at(k).minCoeff(), 0.0);
      acc = next;
    }
  }
}

TEST(Capture, TwoCycle) {
  const auto r = capture_probability(TransitionMatrix(two_cycle()), AttackDurations({2, 2}));
  EXPECT_NEAR(r.mu, 1.0, 1e-15);
}

TEST(Capture, UniformCompleteThree) {
  const TransitionMatrix p(Matrix::Constant(3, 3, 1.0 / 3));
  const auto r = capture_probability(p, AttackDurations({2, 2, 2}));
  EXPECT_NEAR(r.mu, 5.0 / 9, 1e-12);
  EXPECT_NEAR(r.cdf(r.worst_pair.first, r.worst_pair.second), r.mu, 0);
}

TEST(Capture, StarWithShortLeafDurationIsZero) {
  const auto g = GraphTopology::star(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const TransitionMatrix p(random_strategy(g, seed), g);
    const auto r = capture_probability(p, AttackDurations({2, 1, 2}));
    EXPECT_EQ(r.mu, 0.0);
  }
}

TEST(Capture, StationaryBoundHoldsOnRandomChains) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto g = random_general_graph(n, 0.6, seed);
    const TransitionMatrix p(random_strategy(g, seed + 100));
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = 1 + static_cast<int>((seed * 7 + i * 3) % 8);
    const AttackDurations t(tau);
    const auto pi = stationary_distribution(p);
    const double mu = capture_probability(p, t).mu;
    EXPECT_LE(mu, capture_upper_bound(pi, t).stationary_bound + 1e-9);
  }
}

TEST(Capture, ConditionOneEmptyIffPositiveOnFullSupport) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const auto g = random_general_graph(n, 0.4, seed);
    const TransitionMatrix p(random_strategy(g, seed));
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = 1 + static_cast<int>((seed + 5 * i) % 4);
    const AttackDurations t(tau);
    const auto report = validate_attack_durations(g, t);
    EXPECT_EQ(report.condition1_violations.empty(), capture_probability(p, t).mu > 0) << "seed " << seed;
  }
}

TEST(Simulate, TwoCycleIsExact) {
  const auto r = simulate_capture(TransitionMatrix(two_cycle()), AttackDurations({2, 2}), 1000, 123);
  EXPECT_EQ(r.overall, 1.0);
  EXPECT_EQ(r.estimates.minCoeff(), 1.0);
}

TEST(Simulate, UniformCompleteWithinThreeSigma) {
  const TransitionMatrix p(Matrix::Constant(3, 3, 1.0 / 3));
  const std::int64_t trials = 100'000;
  const auto r = simulate_capture(p, AttackDurations({2, 2, 2}), trials, 7);
  const double exact = 5.0 / 9;
  const double band = 3 * std::sqrt(exact * (1 - exact) / trials);
  EXPECT_LE((r.estimates.array() - exact).abs().maxCoeff(), band);
}

TEST(Simulate, DeterministicAndThreadIndependent) {
  const auto g = GraphTopology::complete_bipartite(2, 3);
  const TransitionMatrix p(random_strategy(g, 3), g);
  const AttackDurations tau({4, 3, 2, 5, 4});
  const auto a = simulate_capture(p, tau, 20'000, 99);
  const auto b = simulate_capture(p, tau, 20'000, 99);
  EXPECT_EQ(a.estimates, b.estimates);
  EXPECT_EQ(a.overall, b.overall);
  setenv("PATROLGAME_THREADS", "1", 1);
  const auto c = simulate_capture(p, tau, 20'000, 99);
  unsetenv("PATROLGAME_THREADS");
  EXPECT_EQ(a.estimates, c.estimates);
  const auto d = simulate_capture(p, tau, 20'000, 100);
  EXPECT_NE(a.estimates, d.estimates);
}
