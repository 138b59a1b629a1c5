#include <gtest/gtest.h>

#include "oracles.hpp"
#include "teamlogic/errors.hpp"
#include "teamlogic/kripke.hpp"

using namespace teamlogic;

namespace {

KripkeModel edge_model() { return KripkeModel({"p"}, {"w", "v"}, {{"w", "v"}}, {{"p", {"v"}}}); }

}  // namespace

TEST(Kripke, NamesAndIndices) {
  KripkeModel k = teamlogic::testing::two_point_model();
  EXPECT_EQ(k.size(), 2u);
  EXPECT_EQ(k.world("v"), 1u);
  EXPECT_EQ(k.prop("p"), 0u);
  EXPECT_FALSE(k.find_world("u"));
  EXPECT_THROW(k.world("u"), ModelError);
  EXPECT_THROW(k.prop("q"), ModelError);
  EXPECT_EQ(k.valuation(0), Team{1});
  EXPECT_TRUE(k.edges().empty());
}

TEST(Kripke, RejectsBadDeclarations) {
  using Edges = std::vector<std::pair<std::string, std::string>>;
  EXPECT_THROW(KripkeModel({"p"}, {"w", "w"}, Edges{}, {}), ModelError);
  EXPECT_THROW(KripkeModel({"p", "p"}, {"w"}, Edges{}, {}), ModelError);
  EXPECT_THROW(KripkeModel({"box"}, {"w"}, Edges{}, {}), ModelError);
  EXPECT_THROW(KripkeModel({"p"}, {"w"}, Edges{{"w", "u"}}, {}), ModelError);
  EXPECT_THROW(KripkeModel({"p"}, {"w"}, Edges{}, {{"q", {"w"}}}), ModelError);
  EXPECT_THROW(KripkeModel({"p"}, {"w"}, Edges{}, {{"p", {"u"}}}), ModelError);
  EXPECT_THROW(KripkeModel({"p"}, {""}, Edges{}, {}), ModelError);
}

TEST(Kripke, Image) {
  KripkeModel k = edge_model();
  EXPECT_EQ(image(k, Team{0}), Team{1});
  EXPECT_EQ(image(k, Team{}), Team{});
  KripkeModel id = teamlogic::testing::identity_model({"p"}, {"a", "b", "c"}, {});
  EXPECT_EQ(image(id, Team{0, 2}), (Team{0, 2}));
}

TEST(Kripke, Preimage) {
  KripkeModel k = edge_model();
  EXPECT_EQ(preimage(k, Team{1}), Team{0});
  EXPECT_EQ(preimage(k, Team{}), Team{});
  KripkeModel id = teamlogic::testing::identity_model({"p"}, {"a", "b", "c"}, {});
  EXPECT_EQ(preimage(id, Team{1, 2}), (Team{1, 2}));
}

TEST(Kripke, StepRelation) {
  KripkeModel k = edge_model();
  EXPECT_TRUE(step_rel(k, Team{0}, Team{1}));
  EXPECT_FALSE(step_rel(k, Team{0}, Team{}));
  EXPECT_TRUE(step_rel(k, Team{}, Team{}));
  EXPECT_FALSE(step_rel(k, Team{}, Team{1}));  // S must lie within R[T]
}

TEST(Kripke, TeamsOutsideTheModel) {
  KripkeModel k = edge_model();
  EXPECT_THROW(image(k, Team{2}), ModelError);
  EXPECT_THROW(k.check_team(Team{5}), ModelError);
  EXPECT_NO_THROW(k.check_team(Team{0, 1}));
}

TEST(Kripke, IdentityRelation) {
  EXPECT_TRUE(teamlogic::testing::identity_model({"p"}, {"a", "b"}, {}).is_identity_relation());
  EXPECT_FALSE(edge_model().is_identity_relation());
  EXPECT_FALSE(teamlogic::testing::two_point_model().is_identity_relation());
}

TEST(Kripke, TeamNames) {
  KripkeModel k = teamlogic::testing::two_point_model();
  std::vector<std::string> names{"v", "w"};
  EXPECT_EQ(k.team(names), (Team{0, 1}));
  EXPECT_EQ(k.names(Team{1}), std::vector<std::string>{"v"});
}

TEST(Kripke, FromIndices) {
  std::vector<KripkeModel::Edge> edges{{0, 1}, {1, 1}};
  KripkeModel k = KripkeModel::from_indices({"p"}, {"a", "b"}, edges, {Team{0}});
  EXPECT_TRUE(k.has_edge(0, 1));
  EXPECT_EQ(k.predecessors(1), (Team{0, 1}));
  EXPECT_EQ(k.edges(), edges);
  EXPECT_THROW(KripkeModel::from_indices({"p"}, {"a"}, {}, {}), ModelError);
  EXPECT_THROW(KripkeModel::from_indices({"p"}, {"a"}, {}, {Team{3}}), ModelError);
}
