#include "patrolgame/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "patrolgame/error.hpp"

namespace patrolgame {

std::string to_string(Family family) {
  switch (family) {
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "bipartite";
    case Family::Star: return "star";
    case Family::General: return "general";
  }
  return "unknown";
}

GraphTopology::GraphTopology(Family family, int n, int n_p, int n_q,
                             std::vector<Edge> edges)
    : family_(family), n_(n), n_p_(n_p), n_q_(n_q), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.from) * n_ + e.to] = 1;
  }
}

GraphTopology GraphTopology::complete(int n) {
  if (n < 1) throw PatrolError(ErrorCode::InvalidSpec, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({i, j});
  return GraphTopology(Family::Complete, n, 0, 0, std::move(edges));
}

namespace {

std::vector<Edge> cross_edges(int n_p, int n_q) {
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(n_p) * n_q);
  for (int i = 0; i < n_p; ++i) {
    for (int j = n_p; j < n_p + n_q; ++j) {
      edges.push_back({i, j});
      edges.push_back({j, i});
    }
  }
  return edges;
}

}  // namespace

GraphTopology GraphTopology::complete_bipartite(int n_p, int n_q) {
  if (n_p < 1 || n_q < 1)
    throw PatrolError(ErrorCode::InvalidSpec, "bipartite sides must be >= 1");
  return GraphTopology(Family::CompleteBipartite, n_p + n_q, n_p, n_q,
                       cross_edges(n_p, n_q));
}

GraphTopology GraphTopology::star(int n) {
  if (n < 2) throw PatrolError(ErrorCode::InvalidSpec, "star graph needs n >= 2");
  return GraphTopology(Family::Star, n, 1, n - 1, cross_edges(1, n - 1));
}

GraphTopology GraphTopology::general(int n, std::vector<Edge> edges) {
  if (n < 1) throw PatrolError(ErrorCode::InvalidSpec, "graph needs n >= 1");
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.from << "," << e.to << ") out of range for n=" << n;
      throw PatrolError(ErrorCode::InvalidSpec, msg.str());
    }
  }
  if (!is_strongly_connected(n, edges))
    throw PatrolError(ErrorCode::InvalidSpec, "graph is not strongly connected");
  return GraphTopology(Family::General, n, 0, 0, std::move(edges));
}

bool GraphTopology::has_edge(int from, int to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  return adjacency_[static_cast<std::size_t>(from) * n_ + to] != 0;
}

std::vector<int> GraphTopology::successors(int node) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (has_edge(node, j)) out.push_back(j);
  return out;
}

GraphTopology build_graph(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Complete:
      return GraphTopology::complete(spec.n);
    case Family::CompleteBipartite:
      if (spec.n != 0 && spec.n != spec.n_p + spec.n_q)
        throw PatrolError(ErrorCode::InvalidSpec, "n must equal n_p + n_q");
      return GraphTopology::complete_bipartite(spec.n_p, spec.n_q);
    case Family::Star:
      return GraphTopology::star(spec.n);
    case Family::General:
      return GraphTopology::general(spec.n, spec.edges);
  }
  throw PatrolError(ErrorCode::InvalidSpec, "unknown family");
}

bool is_strongly_connected(int n, std::span<const Edge> edges) {
  if (n <= 0) return false;
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (const auto& e : edges) {
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  // Node 0 reaches everything and everything reaches node 0.
  auto covers_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return covers_all(fwd) && covers_all(bwd);
}

std::vector<int> arrival_distances(const GraphTopology& graph, int target) {
  const int n = graph.size();
  // BFS on reversed edges gives d(i, target) for i != target. The return time
  // is 1 + d(k, target) minimized over successors k of target.
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  dist[target] = 0;
  queue.push_back(target);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (graph.has_edge(u, v) && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  int best_return = -1;
  for (int k = 0; k < n; ++k) {
    if (!graph.has_edge(target, k)) continue;
    int leg = (k == target) ? 0 : dist[k];
    if (leg < 0) continue;
    if (best_return < 0 || leg + 1 < best_return) best_return = leg + 1;
  }
  dist[target] = best_return;
  return dist;
}

AttackDurations::AttackDurations(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_)
    if (v < 1) throw PatrolError(ErrorCode::InvalidSpec, "attack durations must be >= 1");
}

int AttackDurations::max() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

int AttackDurations::min() const {
  return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end());
}

int shortest_covering_tour(const GraphTopology& graph) {
  switch (graph.family()) {
    case Family::Complete:
      return graph.size();
    case Family::CompleteBipartite:
    case Family::Star:
      return 2 * std::max(graph.side_p(), graph.side_q());
    case Family::General:
      return -1;
  }
  return -1;
}

FeasibilityReport validate_attack_durations(const GraphTopology& graph,
                                            const AttackDurations& tau) {
  if (static_cast<int>(tau.size()) != graph.size())
    throw PatrolError(ErrorCode::DimensionMismatch, "tau length differs from node count");

  FeasibilityReport report;
  std::ostringstream notes;
  for (int j = 0; j < graph.size(); ++j) {
    auto dist = arrival_distances(graph, j);
    int worst = *std::max_element(dist.begin(), dist.end());
    if (tau[j] < worst) report.condition1_violations.push_back(j);
  }

  int tour = shortest_covering_tour(graph);
  if (tour < 0) {
    report.condition2_checked = false;
    report.condition2_holds = true;
    notes << "condition 2 not checked for general graphs";
  } else {
    report.condition2_checked = true;
    report.condition2_holds = tau.min() < tour;
    if (!report.condition2_holds)
      notes << "every tau_i >= " << tour
            << " (covering tour length); a deterministic tour captures with probability 1";
  }
  if (!report.condition1_violations.empty()) {
    if (notes.tellp() > 0) notes << "; ";
    notes << report.condition1_violations.size()
          << " node(s) cannot be reached within their attack duration";
  }
  report.notes = notes.str();
  report.nontrivial = report.condition1_violations.empty() && report.condition2_holds;
  return report;
}

}  // namespace patrolgame
