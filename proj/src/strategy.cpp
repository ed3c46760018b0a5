#include "patrolgame/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "patrolgame/error.hpp"

namespace patrolgame {

std::string to_string(Optimality optimality) {
  return optimality == Optimality::Optimal ? "optimal" : "heuristic";
}

double solve_monotone_increasing(const std::function<double(double)>& g, double target,
                                 double lo, double hi, double tol) {
  if (!(lo <= hi)) throw PatrolError(ErrorCode::BracketError, "empty bracket");
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (!(g_lo <= target && target <= g_hi)) {
    std::ostringstream msg;
    msg << "target " << target << " outside [g(lo), g(hi)] = [" << g_lo << ", " << g_hi << "]";
    throw PatrolError(ErrorCode::BracketError, msg.str());
  }
  if (g_lo == target) return lo;
  if (g_hi == target) return hi;
  for (int it = 0; it < kBisectionIterations && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double solve_equalization(std::span<const int> exponents) {
  if (exponents.empty()) throw PatrolError(ErrorCode::InvalidSpec, "no exponents");
  for (int m : exponents)
    if (m < 1) throw PatrolError(ErrorCode::InvalidSpec, "exponent denominators must be >= 1");
  if (exponents.size() == 1) return 0.0;
  auto g = [exponents](double w) {
    double sum = 0.0;
    for (int m : exponents) sum += std::pow(w, 1.0 / m);
    return sum;
  };
  return solve_monotone_increasing(g, static_cast<double>(exponents.size()) - 1.0, 0.0, 1.0);
}

Vector equalized_probabilities(std::span<const int> exponents, double w) {
  Vector out(static_cast<Eigen::Index>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = 1.0 - std::pow(w, 1.0 / exponents[i]);
  out /= out.sum();
  return out;
}

double suboptimality_lower_bound(double mu, const AttackDurations& tau) {
  const double generic =
      std::min(1.0, static_cast<double>(tau.max()) / static_cast<double>(tau.size()));
  return std::clamp(mu / generic, 0.0, 1.0);
}

namespace {

std::vector<int> halved(std::span<const int> tau) {
  std::vector<int> out;
  out.reserve(tau.size());
  for (int t : tau) out.push_back(t / 2);
  return out;
}

void require_at_least_two(std::span<const int> tau, const char* what) {
  for (int t : tau)
    if (t < 2) {
      std::ostringstream msg;
      msg << what << ": every attack duration must be >= 2 (got " << t << ")";
      throw PatrolError(ErrorCode::InfeasibleTau, msg.str());
    }
}

std::vector<int> concat(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

StrategyResult synthesize_complete(const AttackDurations& tau) {
  const int n = static_cast<int>(tau.size());
  if (n < 2) throw PatrolError(ErrorCode::InvalidSpec, "complete strategy needs n >= 2");

  const double w = solve_equalization(tau.values());
  Vector pi = equalized_probabilities(tau.values(), w);
  Matrix p = Vector::Ones(n) * pi.transpose();
  const double mu = 1.0 - w;
  return StrategyResult{
      .P = TransitionMatrix(std::move(p), GraphTopology::complete(n)),
      .pi = {std::move(pi)},
      .mu = mu,
      .w = w,
      .w_p = std::nullopt,
      .w_q = std::nullopt,
      .subopt_lb = suboptimality_lower_bound(mu, tau),
      .optimality = Optimality::Heuristic,
  };
}

StrategyResult synthesize_bipartite(const GraphTopology& graph, const AttackDurations& tau_p,
                                    const AttackDurations& tau_q) {
  if (graph.family() != Family::CompleteBipartite && graph.family() != Family::Star)
    throw PatrolError(ErrorCode::InvalidSpec, "bipartite strategy needs a complete bipartite graph");
  const int n_p = graph.side_p();
  const int n_q = graph.side_q();
  if (static_cast<int>(tau_p.size()) != n_p || static_cast<int>(tau_q.size()) != n_q)
    throw PatrolError(ErrorCode::DimensionMismatch, "side durations do not match side sizes");
  require_at_least_two(tau_p.values(), "side P");
  require_at_least_two(tau_q.values(), "side Q");

  const auto m_p = halved(tau_p.values());
  const auto m_q = halved(tau_q.values());
  const double w_p = solve_equalization(m_p);
  const double w_q = solve_equalization(m_q);
  const Vector p = equalized_probabilities(m_p, w_p);
  const Vector q = equalized_probabilities(m_q, w_q);

  const int n = n_p + n_q;
  Matrix P = Matrix::Zero(n, n);
  P.topRightCorner(n_p, n_q) = Vector::Ones(n_p) * q.transpose();
  P.bottomLeftCorner(n_q, n_p) = Vector::Ones(n_q) * p.transpose();
  Vector pi(n);
  pi << 0.5 * p, 0.5 * q;

  const double w = std::max(w_p, w_q);
  const double mu = 1.0 - w;
  const AttackDurations all(concat(tau_p.values(), tau_q.values()));
  return StrategyResult{
      .P = TransitionMatrix(std::move(P), graph),
      .pi = {std::move(pi)},
      .mu = mu,
      .w = w,
      .w_p = w_p,
      .w_q = w_q,
      .subopt_lb = suboptimality_lower_bound(mu, all),
      .optimality = Optimality::Heuristic,
  };
}

StrategyResult synthesize_star(const AttackDurations& tau) {
  const int n = static_cast<int>(tau.size());
  if (n < 2) throw PatrolError(ErrorCode::InvalidSpec, "star needs n >= 2");
  require_at_least_two(tau.values(), "star");

  const auto leaves = halved(tau.values().subspan(1));
  const double w = solve_equalization(leaves);
  const Vector q = equalized_probabilities(leaves, w);

  Matrix P = Matrix::Zero(n, n);
  P.block(0, 1, 1, n - 1) = q.transpose();
  P.block(1, 0, n - 1, 1).setOnes();
  Vector pi(n);
  pi << 0.5, 0.5 * q;

  const double mu = 1.0 - w;
  return StrategyResult{
      .P = TransitionMatrix(std::move(P), GraphTopology::star(n)),
      .pi = {std::move(pi)},
      .mu = mu,
      .w = w,
      .w_p = 0.0,
      .w_q = w,
      .subopt_lb = suboptimality_lower_bound(mu, tau),
      .optimality = Optimality::Optimal,
  };
}

StrategyResult synthesize(const GraphTopology& graph, const AttackDurations& tau) {
  if (static_cast<int>(tau.size()) != graph.size())
    throw PatrolError(ErrorCode::DimensionMismatch, "tau length differs from node count");
  switch (graph.family()) {
    case Family::Complete:
      return synthesize_complete(tau);
    case Family::Star:
      return synthesize_star(tau);
    case Family::CompleteBipartite: {
      auto v = tau.values();
      const auto n_p = static_cast<std::size_t>(graph.side_p());
      return synthesize_bipartite(graph, AttackDurations({v.begin(), v.begin() + n_p}),
                                  AttackDurations({v.begin() + n_p, v.end()}));
    }
    case Family::General:
      break;
  }
  throw PatrolError(ErrorCode::InvalidSpec, "no synthesizer for general graphs");
}

BaselineResult uniform_bipartite_baseline(int n_p, int n_q, int tau) {
  if (n_p < 2 || n_q < 2)
    throw PatrolError(ErrorCode::InvalidSpec, "baseline needs n_p >= 2 and n_q >= 2");
  const int n = n_p + n_q;
  if (tau < 2 || tau > 2 * n - 4) {
    std::ostringstream msg;
    msg << "tau = " << tau << " outside [2, " << 2 * n - 4 << "]";
    throw PatrolError(ErrorCode::TrivialGame, msg.str());
  }

  Matrix P = Matrix::Zero(n, n);
  P.topRightCorner(n_p, n_q).setConstant(1.0 / n_q);
  P.bottomLeftCorner(n_q, n_p).setConstant(1.0 / n_p);
  Vector pi(n);
  pi << Vector::Constant(n_p, 0.5 / n_p), Vector::Constant(n_q, 0.5 / n_q);

  const int half = tau / 2;
  const double w_p = std::pow(1.0 - 1.0 / n_p, half);
  const double w_q = std::pow(1.0 - 1.0 / n_q, half);
  const double w = std::max(w_p, w_q);
  const double mu = 1.0 - w;
  const AttackDurations durations(std::vector<int>(static_cast<std::size_t>(n), tau));

  BaselineResult out{
      .strategy =
          StrategyResult{
              .P = TransitionMatrix(std::move(P), GraphTopology::complete_bipartite(n_p, n_q)),
              .pi = {std::move(pi)},
              .mu = mu,
              .w = w,
              .w_p = w_p,
              .w_q = w_q,
              .subopt_lb = suboptimality_lower_bound(mu, durations),
              .optimality = Optimality::Heuristic,
          },
      .ratio = mu / (static_cast<double>(tau) / n),
      .constant = (tau % 2 == 1) ? 1.0 / 3.0 : 0.5 * (1.0 - std::exp(-1.0)),
  };
  return out;
}

BoundReport capture_upper_bound(const StationaryDistribution& pi, const AttackDurations& tau,
                                std::optional<double> mu) {
  if (pi.size() != static_cast<int>(tau.size()))
    throw PatrolError(ErrorCode::DimensionMismatch, "pi and tau lengths differ");
  BoundReport report;
  report.stationary_bound = pi[0] * tau[0];
  for (int i = 1; i < pi.size(); ++i)
    report.stationary_bound = std::min(report.stationary_bound, pi[i] * tau[i]);
  report.generic_bound =
      std::min(1.0, static_cast<double>(tau.max()) / static_cast<double>(tau.size()));
  if (mu) report.ratio = *mu / report.generic_bound;
  return report;
}

}  // namespace patrolgame
