#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace patrolgame {

// Nodes are 0-based throughout the C++ API. The JSON and CLI surfaces use
// 1-based node labels and convert at the boundary.

enum class Family { Complete, CompleteBipartite, Star, General };

std::string to_string(Family family);

struct Edge {
  int from = 0;
  int to = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Descriptor consumed by build_graph. Only the fields relevant to the
/// family are read: n for Complete/Star/General, n_p and n_q for
/// CompleteBipartite, edges for General.
struct FamilySpec {
  Family family = Family::Complete;
  int n = 0;
  int n_p = 0;
  int n_q = 0;
  std::vector<Edge> edges;
};

/// Strongly connected digraph with a family tag.
///
/// Complete graphs carry every ordered pair including self-loops. Complete
/// bipartite graphs place side P on nodes [0, n_p) and side Q on
/// [n_p, n_p + n_q), with every cross pair and nothing else. A star is the
/// bipartite graph with n_p = 1, so the center is node 0.
class GraphTopology {
 public:
  static GraphTopology complete(int n);
  static GraphTopology complete_bipartite(int n_p, int n_q);
  static GraphTopology star(int n);
  static GraphTopology general(int n, std::vector<Edge> edges);

  int size() const noexcept { return n_; }
  Family family() const noexcept { return family_; }
  // Side sizes; zero for Complete and General.
  int side_p() const noexcept { return n_p_; }
  int side_q() const noexcept { return n_q_; }

  bool has_edge(int from, int to) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<int> successors(int node) const;

  bool operator==(const GraphTopology& other) const = default;

 private:
  GraphTopology(Family family, int n, int n_p, int n_q, std::vector<Edge> edges);

  Family family_;
  int n_;
  int n_p_;
  int n_q_;
  std::vector<Edge> edges_;            // sorted, unique
  std::vector<unsigned char> adjacency_;  // row-major n x n
};

GraphTopology build_graph(const FamilySpec& spec);

/// True when every node reaches every other node over directed edges.
bool is_strongly_connected(int n, std::span<const Edge> edges);

/// Shortest walk length of at least one step from every node to `target`.
/// Entry `target` is the shortest return time. -1 marks unreachable sources.
std::vector<int> arrival_distances(const GraphTopology& graph, int target);

/// Integer attack durations, one per node, every entry >= 1.
class AttackDurations {
 public:
  AttackDurations() = default;
  explicit AttackDurations(std::vector<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }
  int max() const;
  int min() const;

  bool operator==(const AttackDurations&) const = default;

 private:
  std::vector<int> values_;
};

struct FeasibilityReport {
  bool nontrivial = false;
  // Nodes j with tau_j below the longest shortest arrival time into j.
  std::vector<int> condition1_violations;
  bool condition2_holds = false;
  // False for General graphs, where the closed-walk test is skipped.
  bool condition2_checked = false;
  std::string notes;
};

/// Length of the shortest closed walk visiting every node, for the families
/// where it has a closed form. Returns -1 for General graphs.
int shortest_covering_tour(const GraphTopology& graph);

FeasibilityReport validate_attack_durations(const GraphTopology& graph,
                                            const AttackDurations& tau);

}  // namespace patrolgame
