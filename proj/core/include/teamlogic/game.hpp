#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "teamlogic/formula.hpp"
#include "teamlogic/kripke.hpp"
#include "teamlogic/semantics.hpp"

namespace teamlogic {

/// A function F from the occurrence positions of `formula` to teams. The
/// model is not stored; every operation takes it explicitly.
struct Strategy {
  Formula formula;
  std::map<Position, Team> assignment;

  const Team& at(const Position& p) const;
};

/// Checks the winning-strategy clauses for K, T, f:
///   root gets T; literal positions get teams satisfying the literal;
///   conjunction children equal the parent; disjunction children union to
///   the parent; a nab child is a subteam, nonempty when the parent is;
///   a diamond child S satisfies parent[R]S; a box child is R[parent].
/// Throws FormulaError when f is outside ML(nab) or the strategy is for a
/// different formula or not total, ModelError for teams outside the model.
bool verify_strategy(const KripkeModel& k, const Team& t, const Formula& f, const Strategy& s);

/// As verify_strategy, but names the first violated clause and position;
/// nullopt when the strategy wins.
std::optional<std::string> strategy_violation(const KripkeModel& k, const Team& t, const Formula& f,
                                              const Strategy& s);

/// Searches for a winning strategy top-down, backtracking over disjunction
/// splits (by increasing size of the left part, then of the right), nab
/// subteams and diamond successor teams (both by increasing size).
/// Exists exactly when K, T |= f.
std::optional<Strategy> find_strategy(const KripkeModel& k, const Team& t, const Formula& f,
                                      std::uint64_t max_steps = EvalConfig{}.max_steps);

/// F'(pos) = F(pos) - {a} everywhere. Requires an identity relation and
/// F(child) != {a} below every nab position; raises FormulaError otherwise.
Strategy remove_element(const KripkeModel& k, const Strategy& s, std::size_t a);

/// A_T: the members of T whose single removal falsifies f.
struct EssentialSet {
  Team members;
};

EssentialSet essential_elements(const KripkeModel& k, const Team& t, const Formula& f,
                                const EvalConfig& config = {});

/// Identity-relation model over p1..pn, q1..qn with one world w<a><b> per
/// pair of n-bit tuples (p_i true iff a_i = 1, q_i iff b_i = 1), the team of
/// the 2^n worlds with b = a + 1 mod 2^n, and the n-ary inclusion atom
/// [p1..pn <= q1..qn] that the team satisfies while no proper subteam
/// obtained by one removal does.
struct LowerBoundWitness {
  KripkeModel model;
  Team team;
  Formula atom;
};

/// n in 1..6; larger n raises BudgetExceeded.
LowerBoundWitness lower_bound_witness(unsigned n);

struct AuditReport {
  unsigned n = 0;
  std::size_t nabla_count = 0;
  std::size_t team_size = 0;
  /// World a essential for the atom whose removal keeps f true, with the
  /// strategy F' for T - {a} produced by remove_element. Absent when
  /// nabla_count >= 2^n.
  std::optional<std::size_t> removable;
  std::optional<Strategy> reduced;
};

/// Runs the element-removal argument for f on lower_bound_witness(n).
/// Throws FormulaError if f is outside ML(nab) or fails on the witness team.
AuditReport audit_lower_bound(const Formula& f, unsigned n, std::uint64_t max_steps = EvalConfig{}.max_steps);

/// {"formula": ..., "assignment": {"": [worlds...], "0": [...], ...}} with
/// positions in preorder.
std::string strategy_to_json(const KripkeModel& k, const Strategy& s);
Strategy strategy_from_json(const KripkeModel& k, std::string_view text);

}  // namespace teamlogic
