// Closure laws and rewrite equivalences checked against the definitional
// oracle on every model with at most two worlds. The acceptance test runs
// the larger three-world versions.
#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "teamlogic/enumerate.hpp"
#include "teamlogic/rewrite.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/syntax.hpp"

using namespace teamlogic;

namespace {

const std::vector<std::string> kProps{"p", "q"};

std::vector<KripkeModel> small_models() { return enumerate_models(2, kProps); }

std::vector<std::uint64_t> satisfying_masks(const KripkeModel& k, const Formula& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k.size()); ++m) {
    if (teamlogic::testing::naive_team(k, m, f)) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Properties, Flatness) {
  auto models = small_models();
  for (const Formula& f : teamlogic::testing::distinct_formulas({Dialect::ML, 2, 9, kProps}, 150, 1)) {
    for (const KripkeModel& k : models) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << k.size()); ++m) {
        bool all = true;
        Team::from_bits(m).for_each([&](std::size_t w) { all = all && eval_point(k, w, f); });
        ASSERT_EQ(eval(k, Team::from_bits(m), f), all) << print_formula(f);
      }
    }
  }
}

TEST(Properties, ModalFormulasAreDownwardClosed) {
  auto models = small_models();
  for (const Formula& f : teamlogic::testing::distinct_formulas({Dialect::ML, 2, 9, kProps}, 150, 2)) {
    for (const KripkeModel& k : models) {
      for (std::uint64_t t : satisfying_masks(k, f)) {
        for (std::uint64_t s = t;; s = (s - 1) & t) {
          ASSERT_TRUE(eval(k, Team::from_bits(s), f)) << print_formula(f);
          if (s == 0) break;
        }
      }
    }
  }
}

class ClosureLaws : public ::testing::TestWithParam<Dialect> {};

TEST_P(ClosureLaws, UnionAndEmptyTeam) {
  auto models = small_models();
  for (const Formula& f : teamlogic::testing::distinct_formulas({GetParam(), 2, 9, kProps}, 150, 3)) {
    for (const KripkeModel& k : models) {
      ASSERT_TRUE(eval(k, Team{}, f)) << print_formula(f);
      const auto sat = satisfying_masks(k, f);
      for (std::uint64_t a : sat) {
        for (std::uint64_t b : sat) {
          ASSERT_TRUE(eval(k, Team::from_bits(a | b), f)) << print_formula(f);
          for (std::uint64_t c : sat) ASSERT_TRUE(eval(k, Team::from_bits(a | b | c), f)) << print_formula(f);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dialects, ClosureLaws,
                         ::testing::Values(Dialect::ML, Dialect::MINC, Dialect::MLNab, Dialect::MLNeDisj),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Properties, RewritesPreserveVerdicts) {
  auto models = enumerate_models(3, {"p"});
  auto nab = teamlogic::testing::distinct_formulas({Dialect::MLNab, 2, 8, {"p"}}, 60, 4);
  auto ned = teamlogic::testing::distinct_formulas({Dialect::MLNeDisj, 2, 8, {"p"}}, 60, 5);
  for (std::size_t i = 0; i < models.size(); i += 13) {
    const KripkeModel& k = models[i];
    Evaluator ev(k);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k.size()); ++m) {
      const Team t = Team::from_bits(m);
      for (const Formula& f : nab) {
        ASSERT_EQ(ev.eval(t, nabla_to_nedis(f)), ev.eval(t, f)) << print_formula(f);
        ASSERT_EQ(ev.eval(t, nedis_to_nabla(nabla_to_nedis(f))), ev.eval(t, f)) << print_formula(f);
      }
      for (const Formula& f : ned) ASSERT_EQ(ev.eval(t, nedis_to_nabla(f)), ev.eval(t, f)) << print_formula(f);
    }
  }
}

TEST(Properties, RewriteDialects) {
  for (const Formula& f : teamlogic::testing::distinct_formulas({Dialect::MLNab, 2, 9, kProps}, 100, 6)) {
    EXPECT_EQ(dialect_of(nabla_to_nedis(f)), Dialect::MLNeDisj);
    EXPECT_EQ(dialect_of(nedis_to_nabla(nabla_to_nedis(f))), Dialect::MLNab);
  }
}
