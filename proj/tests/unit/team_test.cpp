#include <gtest/gtest.h>

#include "teamlogic/errors.hpp"
#include "teamlogic/team.hpp"

using teamlogic::Team;

TEST(Team, BasicMembership) {
  Team t{0, 3, 5};
  EXPECT_TRUE(t.contains(3));
  EXPECT_FALSE(t.contains(4));
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.bound(), 6u);
  t.erase(5);
  EXPECT_EQ(t.bound(), 4u);
  EXPECT_EQ(t.members(), (std::vector<std::size_t>{0, 3}));
}

TEST(Team, EmptyTeam) {
  Team t;
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.size(), 0u);
  EXPECT_EQ(t.bound(), 0u);
  EXPECT_TRUE(t.subset_of(Team{1}));
}

TEST(Team, SpillsPastSixtyFourWorlds) {
  Team t{1, 64, 130};
  EXPECT_TRUE(t.contains(130));
  EXPECT_FALSE(t.fits_word());
  EXPECT_EQ(t.bound(), 131u);
  t.erase(130);
  t.erase(64);
  EXPECT_TRUE(t.fits_word());
  EXPECT_EQ(t, Team{1});
}

TEST(Team, FullTeams) {
  EXPECT_EQ(Team::full(0), Team{});
  EXPECT_EQ(Team::full(3), (Team{0, 1, 2}));
  EXPECT_EQ(Team::full(64).size(), 64u);
  EXPECT_EQ(Team::full(70).size(), 70u);
  EXPECT_TRUE(Team::full(70).contains(69));
}

TEST(Team, SetAlgebra) {
  Team a{0, 1, 100};
  Team b{1, 2, 100};
  EXPECT_EQ(a | b, (Team{0, 1, 2, 100}));
  EXPECT_EQ(a & b, (Team{1, 100}));
  EXPECT_EQ(a - b, Team{0});
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(Team{0}.intersects(Team{1}));
  EXPECT_TRUE((Team{1, 100}).subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
}

TEST(Team, OrderIsNumericBitVectorOrder) {
  EXPECT_LT(Team{}, Team{0});
  EXPECT_LT(Team{0}, Team{1});
  EXPECT_LT((Team{0, 1}), Team{2});
  EXPECT_LT(Team{63}, Team{64});
}

TEST(Team, HashAgreesWithEquality) {
  Team a{3, 70};
  Team b{70};
  b.insert(3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  std::hash<Team> h;
  EXPECT_EQ(h(a), h(b));
}

TEST(Team, SubteamsInMaskOrder) {
  std::vector<Team> seen;
  teamlogic::any_subteam(Team{2, 5}, [&](const Team& s) {
    seen.push_back(s);
    return false;
  });
  EXPECT_EQ(seen, (std::vector<Team>{Team{}, Team{2}, Team{5}, Team{2, 5}}));
}

TEST(Team, AnySubteamStopsEarly) {
  int calls = 0;
  bool found = teamlogic::any_subteam(Team{0, 1, 2}, [&](const Team& s) {
    ++calls;
    return s.size() == 2;
  });
  EXPECT_TRUE(found);
  EXPECT_EQ(calls, 4);  // {}, {0}, {1}, {0,1}
}

TEST(Team, SubteamsBySize) {
  auto subs = teamlogic::subteams_by_size(Team{0, 1, 2});
  ASSERT_EQ(subs.size(), 8u);
  EXPECT_EQ(subs[0], Team{});
  EXPECT_EQ(subs[1], Team{0});
  EXPECT_EQ(subs[3], Team{2});
  EXPECT_EQ(subs[4], (Team{0, 1}));
  EXPECT_EQ(subs[7], (Team{0, 1, 2}));
}

TEST(Team, SubteamFromMask) {
  std::vector<std::size_t> members{4, 7, 9};
  EXPECT_EQ(teamlogic::subteam_from_mask(members, 0b101), (Team{4, 9}));
  EXPECT_EQ(teamlogic::subteam_from_mask(members, 0), Team{});
}

TEST(Team, TooManyMembersToEnumerate) {
  EXPECT_THROW(teamlogic::any_subteam(Team::full(63), [](const Team&) { return false; }),
               teamlogic::BudgetExceeded);
}
