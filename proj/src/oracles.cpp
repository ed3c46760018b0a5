#include "patrolgame/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "patrolgame/allocation.hpp"
#include "patrolgame/error.hpp"
#include "patrolgame/parallel.hpp"
#include "patrolgame/strategy.hpp"

namespace patrolgame {

namespace {

constexpr double kSplitTieTolerance = 1e-12;
constexpr double kImprovementThreshold = 1e-7;
constexpr double kInitialStep = 0.2;
constexpr double kFinalStep = 1e-3;
constexpr int kMaxSweepsPerStep = 1000;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string join(std::span<const int> v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

// Calls visit(parts) for every composition of `total` into `count` parts >= 1.
void for_each_composition(int total, int count, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts(static_cast<std::size_t>(count), 1);
  std::function<void(int, int)> rec = [&](int index, int remaining) {
    if (index == count - 1) {
      parts[static_cast<std::size_t>(index)] = remaining;
      visit(parts);
      return;
    }
    const int slots_after = count - index - 1;
    for (int v = 1; v <= remaining - slots_after; ++v) {
      parts[static_cast<std::size_t>(index)] = v;
      rec(index + 1, remaining - v);
    }
  };
  rec(0, total);
}

struct SideOptimum {
  std::vector<int> tau;
  double w = 1.0;
  std::int64_t examined = 0;
};

// Best even composition (entries >= 2) of one bipartite side, memoized by
// the sorted multiset.
SideOptimum enumerate_side(int n_side, int budget) {
  SideOptimum best;
  std::map<std::vector<int>, double> memo;
  for_each_composition(budget / 2, n_side, [&](const std::vector<int>& halves) {
    ++best.examined;
    std::vector<int> key;
    key.reserve(halves.size());
    for (int h : halves) key.push_back(2 * h);
    std::sort(key.begin(), key.end(), std::greater<>());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, side_game_value(key)).first;
    if (best.tau.empty() || it->second < best.w) {
      best.w = it->second;
      best.tau = key;
    }
  });
  return best;
}

// Capture probability of a small dense chain without heap traffic per call.
class CaptureEvaluator {
 public:
  CaptureEvaluator(int n, std::span<const int> tau)
      : n_(n), tau_(tau.begin(), tau.end()), horizon_(*std::max_element(tau.begin(), tau.end())),
        f_(static_cast<std::size_t>(n) * n), next_(f_.size()), cdf_(f_.size()) {}

  double operator()(const std::vector<double>& p) {
    const int n = n_;
    f_ = p;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cdf_[idx(i, j)] = p[idx(i, j)];
    for (int k = 2; k <= horizon_; ++k) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m)
            if (m != j) acc += p[idx(i, m)] * f_[idx(m, j)];
          next_[idx(i, j)] = acc;
        }
      std::swap(f_, next_);
      for (int j = 0; j < n; ++j) {
        if (k > tau_[static_cast<std::size_t>(j)]) continue;
        for (int i = 0; i < n; ++i) cdf_[idx(i, j)] += f_[idx(i, j)];
      }
    }
    return *std::min_element(cdf_.begin(), cdf_.end());
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<int> tau_;
  int horizon_;
  std::vector<double> f_, next_, cdf_;
};

struct RestartOutcome {
  double mu = -1.0;
  std::vector<double> p;
  std::int64_t evaluations = 0;
};

RestartOutcome climb(const GraphTopology& graph, std::span<const int> tau, std::uint64_t seed) {
  const int n = graph.size();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exponential(1.0);
  std::vector<std::vector<int>> support(static_cast<std::size_t>(n));
  std::vector<double> p(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    support[static_cast<std::size_t>(i)] = graph.successors(i);
    double sum = 0.0;
    for (int j : support[static_cast<std::size_t>(i)]) {
      const double e = exponential(rng);
      p[static_cast<std::size_t>(i) * n + j] = e;
      sum += e;
    }
    for (int j : support[static_cast<std::size_t>(i)]) p[static_cast<std::size_t>(i) * n + j] /= sum;
  }

  CaptureEvaluator evaluate(n, tau);
  RestartOutcome out;
  out.mu = evaluate(p);
  out.evaluations = 1;
  std::vector<double> trial;
  for (double step = kInitialStep; step >= kFinalStep; step *= 0.5) {
    bool improved = true;
    for (int sweep = 0; improved && sweep < kMaxSweepsPerStep; ++sweep) {
      improved = false;
      for (int i = 0; i < n; ++i) {
        const auto& cols = support[static_cast<std::size_t>(i)];
        if (cols.size() < 2) continue;
        for (int j : cols) {
          for (double sign : {1.0, -1.0}) {
            trial = p;
            double& entry = trial[static_cast<std::size_t>(i) * n + j];
            entry = std::max(0.0, entry + sign * step);
            double sum = 0.0;
            for (int c : cols) sum += trial[static_cast<std::size_t>(i) * n + c];
            if (sum <= 0.0) continue;
            for (int c : cols) trial[static_cast<std::size_t>(i) * n + c] /= sum;
            const double mu = evaluate(trial);
            ++out.evaluations;
            if (mu > out.mu + kImprovementThreshold) {
              out.mu = mu;
              p.swap(trial);
              improved = true;
            }
          }
        }
      }
    }
  }
  out.p = std::move(p);
  return out;
}

SuiteEntry entry(std::string instance, double expected, double actual, bool pass) {
  return SuiteEntry{std::move(instance), expected, actual, pass};
}

}  // namespace

std::int64_t composition_count(int total, int parts) {
  if (parts < 1 || total < parts) return 0;
  // C(total - 1, parts - 1) with saturation.
  const int n = total - 1;
  int k = std::min(parts - 1, n - (parts - 1));
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > static_cast<long double>(kSearchSpaceLimit)) return kSearchSpaceLimit + 1;
  }
  return static_cast<std::int64_t>(std::llround(c));
}

OracleReport<AllocationCandidate> exhaustive_side_allocation(int n_side, int budget,
                                                             double tolerance) {
  const auto closed = allocate_bipartite_side(n_side, budget);
  if (composition_count(budget / 2, n_side) > kSearchSpaceLimit)
    throw PatrolError(ErrorCode::SearchSpaceExceeded, "side composition space too large");
  auto best = enumerate_side(n_side, budget);

  OracleReport<AllocationCandidate> report;
  report.best_value = 1.0 - best.w;
  report.best_candidate.sides = {best.tau};
  report.best_candidate.budgets = {budget};
  report.best_candidate.w = best.w;
  report.candidates_examined = best.examined;
  report.gap = std::abs((1.0 - closed.w) - report.best_value);
  report.agreement = report.gap <= tolerance;
  return report;
}

OracleReport<AllocationCandidate> exhaustive_allocation(Family family, std::span<const int> sizes,
                                                        int budget, double tolerance) {
  OracleReport<AllocationCandidate> report;
  if (family == Family::Complete) {
    if (sizes.size() != 1) throw PatrolError(ErrorCode::InvalidSpec, "complete oracle takes {n}");
    const int n = sizes[0];
    const auto closed = allocate_complete(n, budget);
    if (composition_count(budget, n) > kSearchSpaceLimit)
      throw PatrolError(ErrorCode::SearchSpaceExceeded, "composition space too large");

    std::map<std::vector<int>, double> memo;
    std::vector<int> best_tau;
    double best_w = 1.0;
    for_each_composition(budget, n, [&](const std::vector<int>& parts) {
      ++report.candidates_examined;
      std::vector<int> key = parts;
      std::sort(key.begin(), key.end(), std::greater<>());
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, complete_game_value(key)).first;
      if (best_tau.empty() || it->second < best_w) {
        best_w = it->second;
        best_tau = key;
      }
    });
    report.best_value = 1.0 - best_w;
    report.best_candidate.sides = {best_tau};
    report.best_candidate.budgets = {budget};
    report.best_candidate.w = best_w;
    report.gap = std::abs(closed.mu - report.best_value);
    report.agreement = report.gap <= tolerance;
    return report;
  }

  if (family != Family::CompleteBipartite)
    throw PatrolError(ErrorCode::InvalidSpec, "exhaustive allocation supports complete and bipartite");
  if (sizes.size() != 2) throw PatrolError(ErrorCode::InvalidSpec, "bipartite oracle takes {n_p, n_q}");
  const int n_p = sizes[0];
  const int n_q = sizes[1];
  const auto closed = co_optimize_bipartite(n_p, n_q, budget);

  std::int64_t space = 0;
  for (int bp = 2 * n_p; bp <= budget - 2 * n_q; bp += 2) {
    space += composition_count(bp / 2, n_p) * composition_count((budget - bp) / 2, n_q);
    if (space > kSearchSpaceLimit)
      throw PatrolError(ErrorCode::SearchSpaceExceeded, "split composition space too large");
  }

  std::map<int, SideOptimum> memo_p, memo_q;
  auto side = [](std::map<int, SideOptimum>& memo, int n_side, int b) -> const SideOptimum& {
    auto it = memo.find(b);
    if (it == memo.end()) it = memo.emplace(b, enumerate_side(n_side, b)).first;
    return it->second;
  };

  double best_mu = -1.0;
  double runner_up = -1.0;
  for (int bp = 2 * n_p; bp <= budget - 2 * n_q; bp += 2) {
    const auto& sp = side(memo_p, n_p, bp);
    const auto& sq = side(memo_q, n_q, budget - bp);
    report.candidates_examined += sp.examined * sq.examined;
    const double mu = 1.0 - std::max(sp.w, sq.w);
    if (mu > best_mu + kSplitTieTolerance) {
      runner_up = best_mu;
      best_mu = mu;
      report.best_candidate.sides = {sp.tau, sq.tau};
      report.best_candidate.budgets = {bp, budget - bp};
      report.best_candidate.w = std::max(sp.w, sq.w);
    } else {
      runner_up = std::max(runner_up, mu);
    }
  }
  report.best_value = best_mu;
  report.best_candidate.split_margin = runner_up < 0.0 ? 1.0 : best_mu - runner_up;
  report.gap = std::abs(closed.mu - best_mu);
  report.agreement = report.gap <= tolerance;
  return report;
}

OracleReport<TransitionMatrix> local_search_strategy(const GraphTopology& graph,
                                                     const AttackDurations& tau, int restarts,
                                                     std::uint64_t seed,
                                                     std::optional<double> reference_mu,
                                                     double tolerance) {
  const int n = graph.size();
  if (n > 8) throw PatrolError(ErrorCode::SearchSpaceExceeded, "local search is limited to n <= 8");
  if (static_cast<int>(tau.size()) != n)
    throw PatrolError(ErrorCode::DimensionMismatch, "tau length differs from node count");
  if (restarts < 1) throw PatrolError(ErrorCode::InvalidSpec, "restarts must be >= 1");

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  parallel_for(outcomes.size(), [&](std::size_t r) {
    outcomes[r] = climb(graph, tau.values(), mix_seed(seed, r));
  });

  std::size_t best = 0;
  std::int64_t evaluations = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    evaluations += outcomes[r].evaluations;
    if (outcomes[r].mu > outcomes[best].mu) best = r;
  }
  Matrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = outcomes[best].p[static_cast<std::size_t>(i) * n + j];

  OracleReport<TransitionMatrix> report{
      .best_value = outcomes[best].mu,
      .best_candidate = TransitionMatrix(std::move(p), graph),
      .candidates_examined = evaluations,
      .agreement = true,
      .gap = 0.0,
  };
  if (reference_mu) {
    report.gap = std::abs(*reference_mu - report.best_value);
    report.agreement = report.gap <= tolerance;
  }
  return report;
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.pass; }));
}

Matrix random_strategy(const GraphTopology& graph, std::uint64_t seed) {
  const int n = graph.size();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exponential(1.0);
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : graph.successors(i)) p(i, j) = exponential(rng);
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

GraphTopology random_general_graph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]});
  std::bernoulli_distribution extra(density);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (extra(rng)) edges.push_back({i, j});
  return GraphTopology::general(n, std::move(edges));
}

SuiteReport bound_suite(const BoundSuiteRanges& ranges) {
  SuiteReport report{.name = "bounds", .entries = {}};
  std::mt19937_64 rng(ranges.seed);

  // Stationary bound on random irreducible chains over every family.
  for (int t = 0; t < ranges.random_matrices; ++t) {
    const int n = std::uniform_int_distribution<int>(2, std::max(2, ranges.random_n_max))(rng);
    const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
    GraphTopology graph = [&] {
      switch (kind) {
        case 0: return GraphTopology::complete(n);
        case 1: {
          const int n_p = std::uniform_int_distribution<int>(1, n - 1)(rng);
          return GraphTopology::complete_bipartite(n_p, n - n_p);
        }
        case 2: return GraphTopology::star(n);
        default: return random_general_graph(n, 0.3, rng());
      }
    }();
    const TransitionMatrix p(random_strategy(graph, rng()), graph);
    std::vector<int> durations(static_cast<std::size_t>(n));
    for (auto& d : durations) d = std::uniform_int_distribution<int>(1, ranges.random_tau_max)(rng);
    const AttackDurations tau(durations);
    const auto pi = stationary_distribution(p);
    const double mu = capture_probability(p, tau).mu;
    const auto bound = capture_upper_bound(pi, tau, mu);
    report.entries.push_back(entry("stationary " + to_string(graph.family()) + " n=" +
                                       std::to_string(n) + " tau=" + join(durations),
                                   bound.stationary_bound, mu, mu <= bound.stationary_bound + 1e-9));
  }

  // Certificate chain of the complete strategy: mu <= min{1, min pi tau} <= min{1, tau_max/n}.
  for (int n = 2; n <= ranges.complete_n_max; ++n) {
    for (int t = 0; t < 20; ++t) {
      std::vector<int> durations(static_cast<std::size_t>(n));
      for (auto& d : durations) d = std::uniform_int_distribution<int>(1, ranges.complete_tau_max)(rng);
      const AttackDurations tau(durations);
      const auto s = synthesize_complete(tau);
      const auto bound = capture_upper_bound(s.pi, tau, s.mu);
      const double certified = std::min(1.0, bound.stationary_bound);
      const bool chain = s.mu <= certified + 1e-9 && certified <= bound.generic_bound + 1e-12;
      const double expected_lb = std::clamp((1.0 - s.w) / bound.generic_bound, 0.0, 1.0);
      report.entries.push_back(entry("complete certificate tau=" + join(durations), expected_lb,
                                     s.subopt_lb,
                                     chain && std::abs(expected_lb - s.subopt_lb) <= 1e-12));
    }
  }

  // Same chain for the bipartite strategy.
  for (int n_p = 2; n_p <= 4; ++n_p) {
    for (int n_q = 2; n_q <= 4; ++n_q) {
      for (int t = 0; t < 5; ++t) {
        std::vector<int> tp(static_cast<std::size_t>(n_p)), tq(static_cast<std::size_t>(n_q));
        for (auto& d : tp) d = std::uniform_int_distribution<int>(2, 9)(rng);
        for (auto& d : tq) d = std::uniform_int_distribution<int>(2, 9)(rng);
        const auto graph = GraphTopology::complete_bipartite(n_p, n_q);
        const auto s = synthesize_bipartite(graph, AttackDurations(tp), AttackDurations(tq));
        std::vector<int> all = tp;
        all.insert(all.end(), tq.begin(), tq.end());
        const AttackDurations tau(all);
        const auto bound = capture_upper_bound(s.pi, tau, s.mu);
        const double certified = std::min(1.0, bound.stationary_bound);
        const bool chain = s.mu <= certified + 1e-9 && certified <= bound.generic_bound + 1e-12;
        const double expected_lb =
            std::clamp((1.0 - std::max(*s.w_p, *s.w_q)) / bound.generic_bound, 0.0, 1.0);
        report.entries.push_back(entry("bipartite certificate tau=" + join(tp) + "|" + join(tq),
                                       expected_lb, s.subopt_lb,
                                       chain && std::abs(expected_lb - s.subopt_lb) <= 1e-12));
      }
    }
  }

  // w > e^-2 for every complete allocation.
  const double floor_w = std::exp(-2.0);
  for (int n = 2; n <= ranges.allocation_n_max; ++n) {
    for (int b = n + 1; b < n * n; ++b) {
      const auto a = allocate_complete(n, b);
      report.entries.push_back(entry("allocation w n=" + std::to_string(n) + " B=" + std::to_string(b),
                                     floor_w, a.w, a.w > floor_w));
    }
  }

  // Constant-factor ratios of the uniform bipartite walk.
  for (int n_p = 2; n_p <= ranges.baseline_side_max; ++n_p) {
    for (int n_q = 2; n_q <= ranges.baseline_side_max; ++n_q) {
      const int n = n_p + n_q;
      for (int tau = 2; tau <= 2 * n - 4; ++tau) {
        const auto b = uniform_bipartite_baseline(n_p, n_q, tau);
        report.entries.push_back(entry("uniform bipartite n_p=" + std::to_string(n_p) +
                                           " n_q=" + std::to_string(n_q) + " tau=" + std::to_string(tau),
                                       b.constant, b.ratio, b.ratio >= b.constant));
      }
    }
  }
  return report;
}

SuiteReport allocation_oracle_suite(int complete_n_max, int bipartite_n_max, double tolerance) {
  SuiteReport report{.name = "alloc-oracle", .entries = {}};
  for (int n = 2; n <= complete_n_max; ++n) {
    for (int b = n + 1; b < n * n; ++b) {
      const auto closed = allocate_complete(n, b);
      const int sizes[] = {n};
      const auto oracle = exhaustive_allocation(Family::Complete, sizes, b, tolerance);
      report.entries.push_back(entry("complete n=" + std::to_string(n) + " B=" + std::to_string(b) +
                                         " tau=" + join(closed.tau),
                                     oracle.best_value, closed.mu, oracle.agreement));
    }
  }
  for (int n = 2; n <= bipartite_n_max; ++n) {
    for (int b = 2 * n; b < 2 * n * n; b += 2) {
      const auto closed = allocate_bipartite_side(n, b);
      const auto oracle = exhaustive_side_allocation(n, b, tolerance);
      report.entries.push_back(entry("side n=" + std::to_string(n) + " B=" + std::to_string(b) +
                                         " tau=" + join(closed.tau),
                                     oracle.best_value, 1.0 - closed.w, oracle.agreement));
    }
  }
  for (int n_p = 2; n_p <= bipartite_n_max; ++n_p) {
    for (int n_q = 2; n_q <= bipartite_n_max; ++n_q) {
      for (int b = 2 * (n_p + n_q) + 2; b < 2 * (n_p * n_p + n_q * n_q); b += 2) {
        const auto closed = co_optimize_bipartite(n_p, n_q, b);
        const int sizes[] = {n_p, n_q};
        const auto oracle = exhaustive_allocation(Family::CompleteBipartite, sizes, b, tolerance);
        const bool same_split = oracle.best_candidate.split_margin <= kSplitTieTolerance ||
                                oracle.best_candidate.budgets[0] == closed.side_p->budget;
        report.entries.push_back(entry("split n_p=" + std::to_string(n_p) + " n_q=" + std::to_string(n_q) +
                                           " B=" + std::to_string(b) +
                                           " B_p=" + std::to_string(closed.side_p->budget),
                                       oracle.best_value, closed.mu, oracle.agreement && same_split));
      }
    }
  }
  return report;
}

SuiteReport closed_form_suite(int instances, std::uint64_t seed, double tolerance) {
  SuiteReport report{.name = "closed-form", .entries = {}};
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int t = 0; t < instances; ++t) {
    const int kind = t % 3;
    std::vector<int> durations;
    GraphTopology graph = GraphTopology::complete(2);
    if (kind == 0) {
      const int n = uniform(2, 6);
      graph = GraphTopology::complete(n);
      for (int i = 0; i < n; ++i) durations.push_back(uniform(1, 8));
    } else if (kind == 1) {
      graph = GraphTopology::complete_bipartite(uniform(1, 4), uniform(1, 4));
      for (int i = 0; i < graph.size(); ++i) durations.push_back(uniform(2, 9));
    } else {
      graph = GraphTopology::star(uniform(2, 6));
      for (int i = 0; i < graph.size(); ++i) durations.push_back(uniform(2, 8));
    }
    const AttackDurations tau(durations);
    const auto s = synthesize(graph, tau);
    const double recursion = capture_probability(s.P, tau).mu;
    report.entries.push_back(entry(to_string(graph.family()) + " n=" + std::to_string(graph.size()) +
                                       " tau=" + join(durations),
                                   s.mu, recursion, std::abs(s.mu - recursion) <= tolerance));
  }
  return report;
}

SuiteReport monte_carlo_suite(int instances, std::int64_t trials, std::uint64_t seed) {
  SuiteReport report{.name = "montecarlo", .entries = {}};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < instances; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
    GraphTopology graph = [&] {
      switch (kind) {
        case 0: return GraphTopology::complete(n);
        case 1: {
          const int n_p = std::uniform_int_distribution<int>(1, n - 1)(rng);
          return GraphTopology::complete_bipartite(n_p, n - n_p);
        }
        case 2: return GraphTopology::star(n);
        default: return random_general_graph(n, 0.3, rng());
      }
    }();
    std::vector<int> durations(static_cast<std::size_t>(n));
    for (auto& d : durations) d = std::uniform_int_distribution<int>(1, 6)(rng);
    const AttackDurations tau(durations);
    const TransitionMatrix p(random_strategy(graph, rng()), graph);
    const auto exact = capture_probability(p, tau).cdf;
    const auto sim = simulate_capture(p, tau, trials, mix_seed(seed, static_cast<std::uint64_t>(t)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double prob = std::clamp(exact(i, j), 0.0, 1.0);
        const double band = 3.0 * std::sqrt(prob * (1.0 - prob) / static_cast<double>(trials));
        const double est = sim.estimates(i, j);
        // 1e-12 absorbs rounding in the exact value when the band is zero.
        report.entries.push_back(entry(to_string(graph.family()) + " #" + std::to_string(t) +
                                           " tau=" + join(durations) + " pair=(" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                       prob, est, std::abs(est - prob) <= band + 1e-12));
      }
    }
  }
  return report;
}

SuiteReport star_optimality_suite(int restarts, std::uint64_t seed) {
  SuiteReport report{.name = "star", .entries = {}};
  for (int n = 3; n <= 4; ++n) {
    std::vector<int> durations(static_cast<std::size_t>(n), 2);
    const auto graph = GraphTopology::star(n);
    // Odometer over {2,3,4}^n.
    while (true) {
      const AttackDurations tau(durations);
      const double analytic = synthesize_star(tau).mu;
      const auto search = local_search_strategy(graph, tau, restarts, seed, analytic);
      report.entries.push_back(entry("star n=" + std::to_string(n) + " tau=" + join(durations),
                                     analytic, search.best_value,
                                     search.best_value <= analytic + 1e-6));
      std::size_t i = 0;
      while (i < durations.size() && durations[i] == 4) durations[i++] = 2;
      if (i == durations.size()) break;
      ++durations[i];
    }
  }
  return report;
}

}  // namespace patrolgame
