#include "patrolgame/markov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "patrolgame/error.hpp"
#include "patrolgame/parallel.hpp"

namespace patrolgame {

namespace {

constexpr int kDirectSolveLimit = 200;
constexpr double kPowerTolerance = 1e-12;
constexpr int kPowerIterations = 100000;

void check_stochastic(const Matrix& p) {
  if (p.rows() == 0 || p.rows() != p.cols())
    throw PatrolError(ErrorCode::DimensionMismatch, "transition matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      double v = p(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << "entry (" << i << "," << j << ") = " << v << " is not a probability";
        throw PatrolError(ErrorCode::InvalidSpec, msg.str());
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      std::ostringstream msg;
      msg << "row " << i << " sums to " << sum;
      throw PatrolError(ErrorCode::InvalidSpec, msg.str());
    }
  }
}

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: the state is a hash of the key, advanced by the
// SplitMix64 increment.
class KeyedStream {
 public:
  KeyedStream(std::uint64_t seed, std::uint64_t pair, std::uint64_t trial)
      : state_(mix64(mix64(mix64(seed) ^ pair) + trial)) {}

  double uniform() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace

TransitionMatrix::TransitionMatrix(Matrix p) : p_(std::move(p)) { check_stochastic(p_); }

TransitionMatrix::TransitionMatrix(Matrix p, const GraphTopology& graph) : p_(std::move(p)) {
  check_stochastic(p_);
  if (p_.rows() != graph.size())
    throw PatrolError(ErrorCode::DimensionMismatch, "matrix size differs from node count");
  for (int i = 0; i < graph.size(); ++i)
    for (int j = 0; j < graph.size(); ++j)
      if (p_(i, j) > 0.0 && !graph.has_edge(i, j)) {
        std::ostringstream msg;
        msg << "positive probability on missing edge (" << i << "," << j << ")";
        throw PatrolError(ErrorCode::InvalidSpec, msg.str());
      }
}

bool is_irreducible(const TransitionMatrix& p) {
  std::vector<Edge> support;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p(i, j) > 0.0) support.push_back({i, j});
  return is_strongly_connected(p.size(), support);
}

StationaryDistribution stationary_distribution(const TransitionMatrix& p) {
  if (!is_irreducible(p))
    throw PatrolError(ErrorCode::NotIrreducible, "transition matrix is reducible");
  const int n = p.size();
  Vector pi;
  if (n <= kDirectSolveLimit) {
    // (P^T - I) pi = 0 stacked with 1^T pi = 1.
    Matrix a(n + 1, n);
    a.topRows(n) = p.matrix().transpose() - Matrix::Identity(n, n);
    a.row(n).setOnes();
    Vector b = Vector::Zero(n + 1);
    b(n) = 1.0;
    pi = a.colPivHouseholderQr().solve(b);
  } else {
    // Lazy chain (P + I)/2 has the same fixed point and is aperiodic.
    Matrix lazy = 0.5 * (p.matrix() + Matrix::Identity(n, n));
    pi = Vector::Constant(n, 1.0 / n);
    for (int it = 0; it < kPowerIterations; ++it) {
      Vector next = lazy.transpose() * pi;
      double delta = (next - pi).cwiseAbs().maxCoeff();
      pi = std::move(next);
      if (delta < kPowerTolerance) break;
    }
  }
  pi = pi.cwiseMax(0.0);
  pi /= pi.sum();
  return {std::move(pi)};
}

HittingTimeTensor hitting_time_probabilities(const TransitionMatrix& p, int k_max) {
  if (k_max < 1) throw PatrolError(ErrorCode::InvalidSpec, "k_max must be >= 1");
  HittingTimeTensor out;
  out.F.reserve(static_cast<std::size_t>(k_max));
  out.F.push_back(p.matrix());
  for (int k = 1; k < k_max; ++k) {
    Matrix off_diagonal = out.F.back();
    off_diagonal.diagonal().setZero();
    out.F.push_back(p.matrix() * off_diagonal);
  }
  return out;
}

CaptureReport capture_probability(const TransitionMatrix& p, const AttackDurations& tau) {
  const int n = p.size();
  if (static_cast<int>(tau.size()) != n)
    throw PatrolError(ErrorCode::DimensionMismatch, "tau length differs from matrix size");
  auto tensor = hitting_time_probabilities(p, tau.max());

  CaptureReport report;
  report.cdf = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 1; k <= tau[j]; ++k) report.cdf.col(j) += tensor.at(k).col(j);

  report.mu = report.cdf(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (report.cdf(i, j) < report.mu) {
        report.mu = report.cdf(i, j);
        report.worst_pair = {i, j};
      }
  return report;
}

SimulationReport simulate_capture(const TransitionMatrix& p, const AttackDurations& tau,
                                  std::int64_t trials, std::uint64_t seed) {
  const int n = p.size();
  if (trials < 1) throw PatrolError(ErrorCode::InvalidSpec, "trials must be >= 1");
  if (static_cast<int>(tau.size()) != n)
    throw PatrolError(ErrorCode::DimensionMismatch, "tau length differs from matrix size");

  // Cumulative rows; the last support entry of each row is pinned to 1 so a
  // draw never falls off the end through rounding.
  std::vector<std::vector<double>> cumulative(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    int last = 0;
    for (int j = 0; j < n; ++j) {
      acc += p(i, j);
      cumulative[i][j] = acc;
      if (p(i, j) > 0.0) last = j;
    }
    for (int j = last; j < n; ++j) cumulative[i][j] = 1.0;
  }
  auto step = [&](int from, KeyedStream& rng) {
    const double u = rng.uniform();
    const auto& row = cumulative[from];
    for (int j = 0; j < n; ++j)
      if (u < row[j]) return j;
    return n - 1;
  };

  std::vector<std::int64_t> hits(static_cast<std::size_t>(n) * n, 0);
  parallel_for(hits.size(), [&](std::size_t pair) {
    const int i = static_cast<int>(pair) / n;
    const int j = static_cast<int>(pair) % n;
    std::int64_t count = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      KeyedStream rng(seed, pair, static_cast<std::uint64_t>(t));
      int x = step(i, rng);
      int steps = 1;
      while (x != j && steps < tau[j]) {
        x = step(x, rng);
        ++steps;
      }
      if (x == j) ++count;
    }
    hits[pair] = count;
  });

  SimulationReport report;
  report.trials = trials;
  report.seed = seed;
  report.estimates = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      report.estimates(i, j) =
          static_cast<double>(hits[static_cast<std::size_t>(i) * n + j]) / trials;
  report.overall = report.estimates(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (report.estimates(i, j) < report.overall) {
        report.overall = report.estimates(i, j);
        report.worst_pair = {i, j};
      }
  return report;
}

}  // namespace patrolgame
