#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/kripke.hpp"
#include "teamlogic/semantics.hpp"

namespace teamlogic {

/// Every Kripke model with at most `max_worlds` worlds over `props`, in
/// ModelStream order, each with all of its teams.
struct Domain {
  std::size_t max_worlds = 3;
  std::vector<std::string> props;
  /// Largest bisimulation depth check_bisim_invariance accepts.
  unsigned max_k = 2;
};

enum class ClosureProperty : std::uint8_t { Downward, Union, EmptyTeam, BisimInvariance };

std::string_view to_string(ClosureProperty p);

/// One (K, T) of a counterexample together with the verdict the property
/// violation requires of it.
struct Instance {
  KripkeModel model;
  Team team;
  bool satisfies;
};

/// Downward: (K,T) true, (K,S) false. Union: T1 true, T2 true, T1 u T2
/// false. EmptyTeam: (K, {}) false. BisimInvariance: (K,T) true, (K',T')
/// false, with the depth in `k`.
struct Counterexample {
  std::vector<Instance> parts;
  std::optional<unsigned> k;
};

struct ClosureReport {
  ClosureProperty property;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  /// Evaluated (model, team) pairs.
  std::uint64_t instances_checked = 0;
};

struct ClosureOptions {
  EvalConfig eval{};
  /// Worker threads for evaluating models; reports do not depend on it.
  unsigned threads = 1;
};

/// Searches all (K, T, S within T) with K,T |= f and K,S |/= f. The first
/// counterexample in enumeration order (model, T by mask, S by mask) wins.
ClosureReport check_downward(const Formula& f, const Domain& domain, const ClosureOptions& opts = {});

/// Searches pairs T1 < T2 of satisfying teams of one model whose union fails.
ClosureReport check_union(const Formula& f, const Domain& domain, const ClosureOptions& opts = {});

ClosureReport check_empty_team(const Formula& f, const Domain& domain, const ClosureOptions& opts = {});

/// Searches pairs of team k-bisimilar instances with different verdicts.
/// Instances are grouped by the set of k-bisimulation classes of their
/// members, which characterizes team k-bisimilarity; reported pairs are
/// re-checked with team_k_bisimilar.
ClosureReport check_bisim_invariance(const Formula& f, unsigned k, const Domain& domain,
                                     const ClosureOptions& opts = {});

/// Re-evaluates every part of a counterexample under `config`.
bool recheck(const Formula& f, const Counterexample& c, const EvalConfig& config = {});

}  // namespace teamlogic
