#include <gtest/gtest.h>

#include <algorithm>

#include "patrolgame/error.hpp"
#include "patrolgame/graph.hpp"

using namespace patrolgame;

namespace {

int self_loops(const GraphTopology& g) {
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [](const Edge& e) { return e.from == e.to; }));
}

}  // namespace

TEST(BuildGraph, CompleteHasSelfLoops) {
  const auto g = build_graph({Family::Complete, 3, 0, 0, {}});
  EXPECT_EQ(g.edges().size(), 9u);
  EXPECT_EQ(self_loops(g), 3);
}

TEST(BuildGraph, BipartiteCrossEdgesOnly) {
  const auto g = build_graph({Family::CompleteBipartite, 5, 3, 2, {}});
  EXPECT_EQ(g.edges().size(), 12u);
  EXPECT_EQ(self_loops(g), 0);
  for (const auto& e : g.edges()) EXPECT_NE(e.from < 3, e.to < 3);
}

TEST(BuildGraph, StarCenterIsFirstNode) {
  const auto g = build_graph({Family::Star, 3, 0, 0, {}});
  const std::vector<Edge> expected = {{0, 1}, {0, 2}, {1, 0}, {2, 0}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.family(), Family::Star);
  EXPECT_EQ(g.side_p(), 1);
  EXPECT_EQ(g.side_q(), 2);
}

TEST(BuildGraph, RejectsBadSizes) {
  EXPECT_THROW(build_graph({Family::Complete, 0, 0, 0, {}}), PatrolError);
  EXPECT_THROW(build_graph({Family::CompleteBipartite, 3, 0, 3, {}}), PatrolError);
  EXPECT_THROW(build_graph({Family::CompleteBipartite, 4, 2, 1, {}}), PatrolError);
  EXPECT_THROW(build_graph({Family::Star, -1, 0, 0, {}}), PatrolError);
}

TEST(BuildGraph, GeneralMustBeStronglyConnected) {
  EXPECT_NO_THROW(GraphTopology::general(3, {{0, 1}, {1, 2}, {2, 0}}));
  try {
    GraphTopology::general(3, {{0, 1}, {1, 2}});
    FAIL();
  } catch (const PatrolError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
  }
  EXPECT_THROW(GraphTopology::general(2, {{0, 5}}), PatrolError);
}

TEST(BuildGraph, FamiliesAreStronglyConnectedAndDeterministic) {
  for (int n = 1; n <= 6; ++n) {
    const auto a = GraphTopology::complete(n);
    EXPECT_TRUE(is_strongly_connected(n, a.edges()));
    EXPECT_EQ(a, GraphTopology::complete(n));
  }
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      const auto b = GraphTopology::complete_bipartite(p, q);
      EXPECT_TRUE(is_strongly_connected(p + q, b.edges()));
      EXPECT_EQ(b, GraphTopology::complete_bipartite(p, q));
    }
}

TEST(AttackDurations, EntriesMustBePositive) {
  EXPECT_THROW(AttackDurations({1, 0}), PatrolError);
  const AttackDurations tau({3, 1, 2});
  EXPECT_EQ(tau.max(), 3);
  EXPECT_EQ(tau.min(), 1);
}

TEST(ArrivalDistances, StarLeafToLeafIsTwo) {
  const auto g = GraphTopology::star(3);
  EXPECT_EQ(arrival_distances(g, 1), (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(arrival_distances(g, 0), (std::vector<int>{2, 1, 1}));
}

TEST(Validate, StarLeafViolation) {
  const auto r = validate_attack_durations(GraphTopology::star(3), AttackDurations({2, 1, 2}));
  EXPECT_EQ(r.condition1_violations, std::vector<int>{1});
  EXPECT_FALSE(r.nontrivial);
}

TEST(Validate, BipartiteSameSideDistance) {
  const auto r = validate_attack_durations(GraphTopology::complete_bipartite(3, 2),
                                           AttackDurations({4, 4, 4, 4, 1}));
  EXPECT_EQ(r.condition1_violations, std::vector<int>{4});
}

TEST(Validate, CompleteAllOnesIsNontrivial) {
  const auto r = validate_attack_durations(GraphTopology::complete(3), AttackDurations({1, 1, 1}));
  EXPECT_TRUE(r.condition1_violations.empty());
  EXPECT_TRUE(r.condition2_holds);
  EXPECT_TRUE(r.condition2_checked);
  EXPECT_TRUE(r.nontrivial);
}

TEST(Validate, ConditionTwoFailsWhenEveryDurationCoversTour) {
  const auto r = validate_attack_durations(GraphTopology::complete(3), AttackDurations({3, 4, 3}));
  EXPECT_FALSE(r.condition2_holds);
  EXPECT_FALSE(r.nontrivial);
  EXPECT_EQ(shortest_covering_tour(GraphTopology::star(4)), 6);
  EXPECT_EQ(shortest_covering_tour(GraphTopology::complete_bipartite(3, 2)), 6);
}

TEST(Validate, GeneralSkipsConditionTwo) {
  const auto g = GraphTopology::general(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto r = validate_attack_durations(g, AttackDurations({3, 3, 3}));
  EXPECT_FALSE(r.condition2_checked);
  EXPECT_TRUE(r.condition1_violations.empty());
  const auto bad = validate_attack_durations(g, AttackDurations({3, 2, 3}));
  EXPECT_EQ(bad.condition1_violations, std::vector<int>{1});
}

TEST(Validate, CompleteNeverViolatesConditionOne) {
  for (int n = 1; n <= 6; ++n) {
    const auto r = validate_attack_durations(GraphTopology::complete(n),
                                             AttackDurations(std::vector<int>(n, 1)));
    EXPECT_TRUE(r.condition1_violations.empty());
  }
}

TEST(Validate, LengthMismatch) {
  try {
    validate_attack_durations(GraphTopology::complete(3), AttackDurations({1, 1}));
    FAIL();
  } catch (const PatrolError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}
