#include "teamlogic/semantics.hpp"

#include <functional>
#include <string>

#include "teamlogic/errors.hpp"

namespace teamlogic {

std::size_t Evaluator::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = std::hash<const void*>{}(k.node);
  return h ^ (k.team.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Evaluator::Evaluator(const KripkeModel& k, EvalConfig config)
    : k_(k), config_(config), all_(k.all()) {
  if (config_.semantics != Semantics::Lax) {
    throw UnsupportedSemantics("only lax team semantics is supported");
  }
}

void Evaluator::prepare(const Team& t, const Formula& f) {
  k_.check_team(t);
  steps_ = 0;
  if (validated_.contains(f.id())) return;
  // Walk only nodes this session has not seen; shared subformulas of
  // earlier queries are already known to use declared propositions.
  std::unordered_set<const void*> fresh;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    if (validated_.contains(cur->id()) || !fresh.insert(cur->id()).second) continue;
    if ((cur->op() == Op::Prop || cur->op() == Op::NegProp) && !k_.find_prop(cur->symbol())) {
      throw ModelError("unknown proposition '" + cur->symbol() + "'");
    }
    for (const Formula& c : cur->children()) stack.push_back(&c);
  }
  validated_.insert(fresh.begin(), fresh.end());
  keep_alive_.push_back(f);
}

void Evaluator::tick() {
  if (++steps_ > config_.max_steps) {
    throw BudgetExceeded("evaluation exceeded " + std::to_string(config_.max_steps) + " steps");
  }
}

const Team& Evaluator::prop_extension(const Formula& literal) const {
  return k_.valuation(k_.prop(literal.symbol()));
}

bool Evaluator::eval(const Team& t, const Formula& f) {
  prepare(t, f);
  if (config_.mode == EvalMode::Reference || dialect_of(f) == Dialect::Mixed) {
    return reference(f, t);
  }
  return holds(f, t);
}

Team Evaluator::max_subteam(const Team& t, const Formula& f) {
  prepare(t, f);
  if (config_.mode == EvalMode::Reference) {
    Team acc;
    any_subteam(t, [&](const Team& s) {
      if (reference(f, s)) acc |= s;
      return false;
    });
    return acc;
  }
  if (dialect_of(f) == Dialect::Mixed) {
    throw FormulaError("max_subteam in optimized mode requires a union-closed dialect, got Mixed");
  }
  return maximal(f, t);
}

std::vector<Team> Evaluator::satisfying_teams(const Formula& f) {
  if (k_.size() > 24) {
    throw BudgetExceeded("cannot enumerate the teams of a model with " + std::to_string(k_.size()) +
                         " worlds");
  }
  std::vector<Team> out;
  const std::uint64_t count = std::uint64_t{1} << k_.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Team t = Team::from_bits(mask);
    if (eval(t, f)) out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference evaluator

bool Evaluator::reference(const Formula& f, const Team& t) {
  tick();
  if (!config_.memo_enabled) return reference_uncached(f, t);
  Key key{f.id(), t};
  if (auto it = ref_memo_.find(key); it != ref_memo_.end()) return it->second;
  bool v = reference_uncached(f, t);
  ref_memo_.emplace(std::move(key), v);
  return v;
}

bool Evaluator::reference_uncached(const Formula& f, const Team& t) {
  switch (f.op()) {
    case Op::Top: return true;
    case Op::Bot: return t.empty();
    case Op::Prop: return t.subset_of(prop_extension(f));
    case Op::NegProp: return !t.intersects(prop_extension(f));
    case Op::And: return reference(f.child(0), t) && reference(f.child(1), t);
    case Op::Or: return reference_split(f.child(0), f.child(1), t, false);
    case Op::NeDisj: return t.empty() || reference_split(f.child(0), f.child(1), t, true);
    case Op::Box: return reference(f.child(0), image(k_, t));
    case Op::Dia: {
      const Team succ = image(k_, t);
      return any_subteam(succ, [&](const Team& s) {
        return t.subset_of(preimage(k_, s)) && reference(f.child(0), s);
      });
    }
    case Op::Nab:
      if (t.empty()) return true;
      return any_subteam(t, [&](const Team& s) { return !s.empty() && reference(f.child(0), s); });
    case Op::Incl: return reference_incl(f, t);
  }
  return false;
}

// All pairs (T1, T2) with T1 u T2 = T, overlap allowed: T1 ranges over the
// subsets of T and T2 over the supersets of T \ T1 within T.
bool Evaluator::reference_split(const Formula& a, const Formula& b, const Team& t, bool nonempty) {
  std::vector<std::size_t> members = t.members();
  if (members.size() > 40) {
    throw BudgetExceeded("disjunction split search over " + std::to_string(members.size()) + " worlds");
  }
  const std::uint64_t full = members.empty() ? 0 : (std::uint64_t{1} << members.size()) - 1;
  for (std::uint64_t left = 0;; ++left) {
    const std::uint64_t rest = full & ~left;
    for (std::uint64_t shared = left;; shared = (shared - 1) & left) {
      const std::uint64_t right = rest | shared;
      if (!nonempty || (left != 0 && right != 0)) {
        tick();
        if (reference(a, subteam_from_mask(members, left)) &&
            reference(b, subteam_from_mask(members, right))) {
          return true;
        }
      }
      if (shared == 0) break;
    }
    if (left == full) break;
  }
  return false;
}

bool Evaluator::reference_incl(const Formula& f, const Team& t) {
  auto lhs = f.lhs();
  auto rhs = f.rhs();
  std::vector<std::size_t> members = t.members();
  for (std::size_t w : members) {
    bool matched = false;
    for (std::size_t v : members) {
      bool all = true;
      for (std::size_t i = 0; i < lhs.size() && all; ++i) {
        all = reference(lhs[i], Team{w}) == reference(rhs[i], Team{v});
      }
      if (all) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Optimized evaluator: maximal satisfying subteams

// Decides K, T |= f from maximal subteams of the children; conjunctions and
// boxes short-circuit without computing a fixpoint.
bool Evaluator::holds(const Formula& f, const Team& t) {
  tick();
  if (f.is_pure_ml()) return t.subset_of(truth_set(f));
  switch (f.op()) {
    case Op::And: return holds(f.child(0), t) && holds(f.child(1), t);
    case Op::Or: return (maximal(f.child(0), t) | maximal(f.child(1), t)) == t;
    case Op::NeDisj: {
      if (t.empty()) return true;
      Team a = maximal(f.child(0), t);
      if (a.empty()) return false;
      Team b = maximal(f.child(1), t);
      return !b.empty() && (a | b) == t;
    }
    case Op::Nab: return t.empty() || !maximal(f.child(0), t).empty();
    case Op::Box: return holds(f.child(0), image(k_, t));
    case Op::Dia: return t.subset_of(preimage(k_, maximal(f.child(0), image(k_, t))));
    default: return maximal(f, t) == t;
  }
}

const Team& Evaluator::truth_set(const Formula& f) {
  if (auto it = truth_.find(f.id()); it != truth_.end()) return it->second;
  Team v = compute_truth_set(f);
  return truth_.emplace(f.id(), std::move(v)).first->second;
}

Team Evaluator::compute_truth_set(const Formula& f) {
  switch (f.op()) {
    case Op::Top: return all_;
    case Op::Bot: return {};
    case Op::Prop: return prop_extension(f);
    case Op::NegProp: return all_ - prop_extension(f);
    case Op::And: return truth_set(f.child(0)) & truth_set(f.child(1));
    case Op::Or: return truth_set(f.child(0)) | truth_set(f.child(1));
    case Op::Dia: return preimage(k_, truth_set(f.child(0)));
    case Op::Box: return all_ - preimage(k_, all_ - truth_set(f.child(0)));
    default: throw FormulaError("truth sets exist only for modal formulas");
  }
}

Team Evaluator::maximal(const Formula& f, const Team& t) {
  tick();
  if (f.is_pure_ml()) return t & truth_set(f);
  if (!config_.memo_enabled) return maximal_uncached(f, t);
  Key key{f.id(), t};
  if (auto it = max_memo_.find(key); it != max_memo_.end()) return it->second;
  Team v = maximal_uncached(f, t);
  max_memo_.emplace(std::move(key), v);
  return v;
}

Team Evaluator::maximal_uncached(const Formula& f, const Team& t) {
  switch (f.op()) {
    case Op::And: {
      Team s = t;
      while (true) {
        Team next = maximal(f.child(0), s) & maximal(f.child(1), s);
        if (next == s) return s;
        s = std::move(next);
      }
    }
    case Op::Or: return maximal(f.child(0), t) | maximal(f.child(1), t);
    case Op::NeDisj: {
      Team a = maximal(f.child(0), t);
      Team b = maximal(f.child(1), t);
      if (a.empty() || b.empty()) return {};
      return a | b;
    }
    case Op::Nab: return maximal(f.child(0), t).empty() ? Team{} : t;
    case Op::Box: {
      Team s = t;
      while (true) {
        Team good = maximal(f.child(0), image(k_, s));
        Team next;
        s.for_each([&](std::size_t w) {
          if (k_.successors(w).subset_of(good)) next.insert(w);
        });
        if (next == s) return s;
        s = std::move(next);
      }
    }
    case Op::Dia: {
      Team s = t;
      while (true) {
        Team good = maximal(f.child(0), image(k_, s));
        Team next = s & preimage(k_, good);
        if (next == s) return s;
        s = std::move(next);
      }
    }
    case Op::Incl: return maximal_incl(f, t);
    default: throw FormulaError("unexpected connective in maximal-subteam evaluation");
  }
}

Team Evaluator::maximal_incl(const Formula& f, const Team& t) {
  auto lhs = f.lhs();
  auto rhs = f.rhs();
  auto pattern = [&](std::span<const Formula> side, std::size_t w) {
    std::string bits(side.size(), '0');
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (truth_set(side[i]).contains(w)) bits[i] = '1';
    }
    return bits;
  };
  Team s = t;
  while (true) {
    std::unordered_set<std::string> available;
    s.for_each([&](std::size_t v) { available.insert(pattern(rhs, v)); });
    Team next;
    s.for_each([&](std::size_t w) {
      if (available.contains(pattern(lhs, w))) next.insert(w);
    });
    if (next == s) return s;
    s = std::move(next);
  }
}

// ---------------------------------------------------------------------------

bool eval(const KripkeModel& k, const Team& t, const Formula& f, const EvalConfig& config) {
  Evaluator ev(k, config);
  return ev.eval(t, f);
}

namespace {

bool point(const KripkeModel& k, std::size_t w, const Formula& f) {
  switch (f.op()) {
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Prop: return k.valuation(k.prop(f.symbol())).contains(w);
    case Op::NegProp: return !k.valuation(k.prop(f.symbol())).contains(w);
    case Op::And: return point(k, w, f.child(0)) && point(k, w, f.child(1));
    case Op::Or: return point(k, w, f.child(0)) || point(k, w, f.child(1));
    case Op::Dia: {
      bool found = false;
      k.successors(w).for_each([&](std::size_t v) { found = found || point(k, v, f.child(0)); });
      return found;
    }
    case Op::Box: {
      bool all = true;
      k.successors(w).for_each([&](std::size_t v) { all = all && point(k, v, f.child(0)); });
      return all;
    }
    default: throw FormulaError("pointed evaluation requires a modal formula");
  }
}

}  // namespace

bool eval_point(const KripkeModel& k, std::size_t world, const Formula& f) {
  if (!f.is_pure_ml()) throw FormulaError("pointed evaluation requires a modal formula");
  if (world >= k.size()) throw ModelError("world index out of range");
  return point(k, world, f);
}

std::vector<Team> satisfying_teams(const KripkeModel& k, const Formula& f, const EvalConfig& config) {
  Evaluator ev(k, config);
  return ev.satisfying_teams(f);
}

Team max_subteam(const KripkeModel& k, const Team& t, const Formula& f, const EvalConfig& config) {
  Evaluator ev(k, config);
  return ev.max_subteam(t, f);
}

}  // namespace teamlogic
