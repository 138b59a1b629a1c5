#include <gtest/gtest.h>

#include "teamlogic/bisimulation.hpp"
#include "teamlogic/closure.hpp"
#include "teamlogic/errors.hpp"
#include "teamlogic/syntax.hpp"

using namespace teamlogic;

namespace {

Formula F(const char* s) { return parse_formula(s); }

Domain domain(std::vector<std::string> props, std::size_t worlds = 3) {
  Domain d;
  d.max_worlds = worlds;
  d.props = std::move(props);
  return d;
}

constexpr EvalConfig kReference{EvalMode::Reference};

// The witness model is the two-world model with no edges and p true at one
// world; `p_world` names the index of that world.
void expect_two_point(const KripkeModel& k, std::size_t p_world) {
  ASSERT_EQ(k.size(), 2u);
  EXPECT_TRUE(k.edges().empty());
  EXPECT_EQ(k.valuation(0), Team{p_world});
}

}  // namespace

TEST(Closure, InclusionAtomIsNotDownwardClosed) {
  const Formula f = F("[p <= ~p]");
  ClosureReport r = check_downward(f, domain({"p"}));
  EXPECT_EQ(r.property, ClosureProperty::Downward);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample);
  const auto& parts = r.counterexample->parts;
  ASSERT_EQ(parts.size(), 2u);
  // the two-point model with w0 playing v: T = {w, v}, S = {v}
  expect_two_point(parts[0].model, 0);
  EXPECT_EQ(parts[0].team, (Team{0, 1}));
  EXPECT_TRUE(parts[0].satisfies);
  EXPECT_EQ(parts[1].team, Team{0});
  EXPECT_FALSE(parts[1].satisfies);
  EXPECT_TRUE(recheck(f, *r.counterexample, kReference));
}

TEST(Closure, NablaIsNotDownwardClosed) {
  const Formula f = F("nab p");
  ClosureReport r = check_downward(f, domain({"p"}));
  ASSERT_FALSE(r.passed);
  const auto& parts = r.counterexample->parts;
  expect_two_point(parts[0].model, 0);
  EXPECT_EQ(parts[0].team, (Team{0, 1}));
  EXPECT_EQ(parts[1].team, Team{1});  // the world playing w
  EXPECT_TRUE(recheck(f, *r.counterexample, kReference));
}

TEST(Closure, ModalFormulasAreDownwardClosed) {
  for (const char* s : {"p", "dia p | box ~p", "box (p | dia p)"}) {
    ClosureReport r = check_downward(F(s), domain({"p"}));
    EXPECT_TRUE(r.passed) << s;
    EXPECT_FALSE(r.counterexample);
    EXPECT_EQ(r.instances_checked, 1u + 2 * 4 + 4 * 64 + 8 * 4096);
  }
}

TEST(Closure, UnionClosure) {
  EXPECT_TRUE(check_union(F("[p1,p2 <= q1,q2]"), domain({"p1", "p2", "q1", "q2"}, 2)).passed);
  EXPECT_TRUE(check_union(F("nab p"), domain({"p"})).passed);
  EXPECT_TRUE(check_union(F("p |! dia p"), domain({"p"})).passed);
  ClosureReport empty = check_union(F("[p <= ~p]"), domain({"p"}, 0));
  EXPECT_TRUE(empty.passed);
  EXPECT_EQ(empty.instances_checked, 1u);
}

TEST(Closure, EmptyTeamProperty) {
  for (const char* s : {"[p <= ~p]", "bot", "nab (p & ~p)", "dia p |! box p"}) {
    EXPECT_TRUE(check_empty_team(F(s), domain({"p"})).passed) << s;
  }
}

TEST(Closure, BisimulationInvariance) {
  EXPECT_TRUE(check_bisim_invariance(F("[p <= ~p]"), 0, domain({"p"})).passed);
  EXPECT_TRUE(check_bisim_invariance(F("nab dia p"), 1, domain({"p"})).passed);

  const Formula f = F("dia p");
  ClosureReport r = check_bisim_invariance(f, 0, domain({"p"}));
  ASSERT_FALSE(r.passed);
  const Counterexample& c = *r.counterexample;
  ASSERT_EQ(c.parts.size(), 2u);
  EXPECT_EQ(c.k, 0u);
  EXPECT_TRUE(c.parts[0].satisfies);
  EXPECT_FALSE(c.parts[1].satisfies);
  EXPECT_TRUE(team_k_bisimilar(c.parts[0].model, c.parts[0].team, c.parts[1].model, c.parts[1].team, 0));
  EXPECT_TRUE(recheck(f, c, kReference));
  EXPECT_TRUE(recheck(f, c));
}

TEST(Closure, DepthAboveDomainBound) {
  Domain d = domain({"p"}, 1);
  d.max_k = 1;
  EXPECT_THROW(check_bisim_invariance(F("p"), 2, d), FormulaError);
}

TEST(Closure, ReportsDoNotDependOnThreads) {
  ClosureOptions par;
  par.threads = 4;
  for (const char* s : {"[p <= ~p]", "nab p", "dia p"}) {
    const Formula f = F(s);
    ClosureReport a = check_downward(f, domain({"p"}));
    ClosureReport b = check_downward(f, domain({"p"}), par);
    ASSERT_EQ(a.passed, b.passed);
    ASSERT_EQ(a.counterexample.has_value(), b.counterexample.has_value());
    if (a.counterexample) {
      ASSERT_EQ(a.counterexample->parts[0].team, b.counterexample->parts[0].team);
      ASSERT_EQ(a.counterexample->parts[1].team, b.counterexample->parts[1].team);
    }
    ClosureReport c = check_bisim_invariance(f, 0, domain({"p"}));
    ClosureReport e = check_bisim_invariance(f, 0, domain({"p"}), par);
    EXPECT_EQ(c.passed, e.passed);
    EXPECT_EQ(c.instances_checked, e.instances_checked);
  }
}

TEST(Closure, RecheckDetectsWrongVerdicts) {
  const Formula f = F("[p <= ~p]");
  ClosureReport r = check_downward(f, domain({"p"}));
  Counterexample c = *r.counterexample;
  c.parts[1].satisfies = true;
  EXPECT_FALSE(recheck(f, c));
}

TEST(Closure, PropertyNames) {
  EXPECT_EQ(to_string(ClosureProperty::Downward), "downward");
  EXPECT_EQ(to_string(ClosureProperty::BisimInvariance), "bisim-invariance");
}
