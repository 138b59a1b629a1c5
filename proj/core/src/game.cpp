#include "teamlogic/game.hpp"

#include <json.hpp>

#include <unordered_map>
#include <vector>

#include "teamlogic/errors.hpp"
#include "teamlogic/syntax.hpp"

namespace teamlogic {

namespace {

void require_mlnab(const Formula& f) {
  const Dialect d = dialect_of(f);
  if (d != Dialect::ML && d != Dialect::MLNab) {
    throw FormulaError("semantic games are defined for ML(nab) formulas only, got " + std::string(to_string(d)));
  }
}

bool literal_holds(const KripkeModel& k, const Formula& f, const Team& t) {
  switch (f.op()) {
    case Op::Top: return true;
    case Op::Bot: return t.empty();
    case Op::Prop: return t.subset_of(k.valuation(k.prop(f.symbol())));
    case Op::NegProp: return !t.intersects(k.valuation(k.prop(f.symbol())));
    default: return false;
  }
}

class StrategySearch {
 public:
  StrategySearch(const KripkeModel& k, std::uint64_t max_steps) : k_(k), max_steps_(max_steps) {}

  bool solve(const Formula& f, const Team& x) {
    if (++steps_ > max_steps_) {
      throw BudgetExceeded("strategy search exceeded " + std::to_string(max_steps_) + " steps");
    }
    Key key{f.id(), x};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.ok;
    Choice c = decide(f, x);
    const bool ok = c.ok;
    memo_.emplace(std::move(key), std::move(c));
    return ok;
  }

  void build(const Formula& f, const Position& pos, const Team& x, std::map<Position, Team>& out) const {
    out[pos] = x;
    switch (f.op()) {
      case Op::And:
        build(f.child(0), pos.child(0), x, out);
        build(f.child(1), pos.child(1), x, out);
        return;
      case Op::Or: {
        const Choice& c = memo_.at(Key{f.id(), x});
        build(f.child(0), pos.child(0), c.left, out);
        build(f.child(1), pos.child(1), c.right, out);
        return;
      }
      case Op::Nab:
      case Op::Dia: build(f.child(0), pos.child(0), memo_.at(Key{f.id(), x}).left, out); return;
      case Op::Box: build(f.child(0), pos.child(0), image(k_, x), out); return;
      default: return;
    }
  }

 private:
  struct Key {
    const void* node;
    Team team;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = std::hash<const void*>{}(k.node);
      return h ^ (k.team.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  };
  struct Choice {
    bool ok = false;
    Team left;
    Team right;
  };

  Choice decide(const Formula& f, const Team& x) {
    switch (f.op()) {
      case Op::Top:
      case Op::Bot:
      case Op::Prop:
      case Op::NegProp: return {literal_holds(k_, f, x), {}, {}};
      case Op::And: return {solve(f.child(0), x) && solve(f.child(1), x), {}, {}};
      case Op::Or:
        for (const Team& left : subteams_by_size(x)) {
          if (!solve(f.child(0), left)) continue;
          const Team rest = x - left;
          for (const Team& shared : subteams_by_size(left)) {
            Team right = rest | shared;
            if (solve(f.child(1), right)) return {true, left, std::move(right)};
          }
        }
        return {};
      case Op::Nab:
        if (x.empty()) return {solve(f.child(0), x), {}, {}};
        for (const Team& s : subteams_by_size(x)) {
          if (!s.empty() && solve(f.child(0), s)) return {true, s, {}};
        }
        return {};
      case Op::Dia:
        for (const Team& s : subteams_by_size(image(k_, x))) {
          if (step_rel(k_, x, s) && solve(f.child(0), s)) return {true, s, {}};
        }
        return {};
      case Op::Box: return {solve(f.child(0), image(k_, x)), {}, {}};
      default: throw FormulaError("semantic games are defined for ML(nab) formulas only");
    }
  }

  const KripkeModel& k_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  std::unordered_map<Key, Choice, KeyHash> memo_;
};

}  // namespace

const Team& Strategy::at(const Position& p) const {
  auto it = assignment.find(p);
  if (it == assignment.end()) throw FormulaError("strategy has no team at position '" + p.to_string() + "'");
  return it->second;
}

std::optional<std::string> strategy_violation(const KripkeModel& k, const Team& t, const Formula& f,
                                              const Strategy& s) {
  require_mlnab(f);
  if (!(s.formula == f)) throw FormulaError("strategy belongs to a different formula");
  const std::vector<Position> all = positions(f);
  if (s.assignment.size() != all.size()) throw FormulaError("strategy is not total on the formula's positions");
  for (const auto& [pos, team] : s.assignment) k.check_team(team);
  k.check_team(t);

  auto where = [](const Position& p) { return " at position '" + p.to_string() + "'"; };
  if (s.at(Position{}) != t) return "root is not assigned the team";
  for (const Position& pos : all) {
    const Formula& g = subformula_at(f, pos);
    const Team& x = s.at(pos);
    switch (g.op()) {
      case Op::Top:
      case Op::Bot:
      case Op::Prop:
      case Op::NegProp:
        if (!literal_holds(k, g, x)) return "literal does not hold" + where(pos);
        break;
      case Op::And:
        if (s.at(pos.child(0)) != x || s.at(pos.child(1)) != x) {
          return "conjunct teams differ from the parent" + where(pos);
        }
        break;
      case Op::Or:
        if ((s.at(pos.child(0)) | s.at(pos.child(1))) != x) {
          return "disjunct teams do not cover the parent exactly" + where(pos);
        }
        break;
      case Op::Nab: {
        const Team& c = s.at(pos.child(0));
        if (!c.subset_of(x)) return "nab child is not a subteam" + where(pos);
        if (!x.empty() && c.empty()) return "nab child is empty" + where(pos);
        break;
      }
      case Op::Dia:
        if (!step_rel(k, x, s.at(pos.child(0)))) return "diamond child is not a successor team" + where(pos);
        break;
      case Op::Box:
        if (s.at(pos.child(0)) != image(k, x)) return "box child is not the image" + where(pos);
        break;
      default: break;
    }
  }
  return std::nullopt;
}

bool verify_strategy(const KripkeModel& k, const Team& t, const Formula& f, const Strategy& s) {
  return !strategy_violation(k, t, f, s).has_value();
}

std::optional<Strategy> find_strategy(const KripkeModel& k, const Team& t, const Formula& f,
                                      std::uint64_t max_steps) {
  require_mlnab(f);
  k.check_team(t);
  for (const std::string& p : props_of(f)) k.prop(p);
  StrategySearch search(k, max_steps);
  if (!search.solve(f, t)) return std::nullopt;
  Strategy s{f, {}};
  search.build(f, Position{}, t, s.assignment);
  return s;
}

Strategy remove_element(const KripkeModel& k, const Strategy& s, std::size_t a) {
  if (!k.is_identity_relation()) throw FormulaError("element removal requires the identity relation");
  if (a >= k.size()) throw ModelError("world index out of range");
  for (const Position& pos : positions(s.formula)) {
    if (subformula_at(s.formula, pos).op() == Op::Nab && s.at(pos.child(0)) == Team{a}) {
      throw FormulaError("removing world '" + k.worlds()[a] + "' empties the nab witness" +
                         " at position '" + pos.to_string() + "'");
    }
  }
  Strategy out{s.formula, {}};
  for (const auto& [pos, team] : s.assignment) out.assignment.emplace(pos, team - Team{a});
  return out;
}

EssentialSet essential_elements(const KripkeModel& k, const Team& t, const Formula& f, const EvalConfig& config) {
  Evaluator ev(k, config);
  k.check_team(t);
  EssentialSet out;
  t.for_each([&](std::size_t a) {
    if (!ev.eval(t - Team{a}, f)) out.members.insert(a);
  });
  return out;
}

LowerBoundWitness lower_bound_witness(unsigned n) {
  if (n == 0) throw FormulaError("witness arity must be at least 1");
  if (n > 6) throw BudgetExceeded("witness arity " + std::to_string(n) + " exceeds the limit of 6");
  const std::size_t half = std::size_t{1} << n;
  auto bits = [n](std::size_t v) {
    std::string s(n, '0');
    for (unsigned i = 0; i < n; ++i) {
      if ((v >> (n - 1 - i)) & 1U) s[i] = '1';
    }
    return s;
  };

  std::vector<std::string> props;
  for (unsigned i = 1; i <= n; ++i) props.push_back("p" + std::to_string(i));
  for (unsigned i = 1; i <= n; ++i) props.push_back("q" + std::to_string(i));
  std::vector<std::string> worlds;
  std::vector<KripkeModel::Edge> edges;
  std::vector<Team> valuation(2 * n);
  for (std::size_t a = 0; a < half; ++a) {
    for (std::size_t b = 0; b < half; ++b) {
      const std::size_t w = a * half + b;
      worlds.push_back("w" + bits(a) + bits(b));
      edges.emplace_back(w, w);
      for (unsigned i = 0; i < n; ++i) {
        if ((a >> (n - 1 - i)) & 1U) valuation[i].insert(w);
        if ((b >> (n - 1 - i)) & 1U) valuation[n + i].insert(w);
      }
    }
  }
  LowerBoundWitness out{KripkeModel::from_indices(props, worlds, edges, std::move(valuation)), {}, Formula::top()};
  for (std::size_t a = 0; a < half; ++a) out.team.insert(a * half + (a + 1) % half);

  std::vector<Formula> lhs, rhs;
  for (unsigned i = 1; i <= n; ++i) {
    lhs.push_back(Formula::prop("p" + std::to_string(i)));
    rhs.push_back(Formula::prop("q" + std::to_string(i)));
  }
  out.atom = Formula::incl(std::move(lhs), std::move(rhs));

  Evaluator ev(out.model);
  if (out.team.size() != half || !ev.eval(out.team, out.atom) ||
      essential_elements(out.model, out.team, out.atom).members != out.team) {
    throw Error("internal error: lower-bound witness failed its own check");
  }
  return out;
}

AuditReport audit_lower_bound(const Formula& f, unsigned n, std::uint64_t max_steps) {
  require_mlnab(f);
  LowerBoundWitness w = lower_bound_witness(n);
  AuditReport report;
  report.n = n;
  report.nabla_count = occ_nabla(f);
  report.team_size = w.team.size();

  EvalConfig config;
  config.max_steps = max_steps;
  if (!eval(w.model, w.team, f, config)) {
    throw FormulaError("formula already fails to define the atom: it is false on the witness team");
  }
  if (report.nabla_count >= report.team_size) return report;

  std::optional<Strategy> s = find_strategy(w.model, w.team, f, max_steps);
  if (!s) throw Error("internal error: no strategy for a satisfied formula");
  Team blocked;
  for (const Position& pos : positions(f)) {
    if (subformula_at(f, pos).op() != Op::Nab) continue;
    const Team& c = s->at(pos.child(0));
    if (c.size() == 1) blocked |= c;
  }
  const Team candidates = w.team - blocked;
  const std::size_t a = candidates.members().front();
  Strategy reduced = remove_element(w.model, *s, a);
  if (!verify_strategy(w.model, w.team - Team{a}, f, reduced)) {
    throw Error("internal error: reduced strategy does not verify");
  }
  report.removable = a;
  report.reduced = std::move(reduced);
  return report;
}

std::string strategy_to_json(const KripkeModel& k, const Strategy& s) {
  nlohmann::ordered_json j;
  j["formula"] = print_formula(s.formula);
  nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
  for (const Position& pos : positions(s.formula)) assignment[pos.to_string()] = k.names(s.at(pos));
  j["assignment"] = std::move(assignment);
  return j.dump(2) + "\n";
}

Strategy strategy_from_json(const KripkeModel& k, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed strategy document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("formula") || !j.contains("assignment") || !j["formula"].is_string() ||
      !j["assignment"].is_object()) {
    throw ModelError("strategy document needs a string 'formula' and an object 'assignment'");
  }
  Strategy s{parse_formula(j["formula"].get<std::string>()), {}};
  for (const auto& [key, worlds] : j["assignment"].items()) {
    if (!worlds.is_array()) throw ModelError("assignment of '" + key + "' must be a list of worlds");
    Team t;
    for (const auto& w : worlds) {
      if (!w.is_string()) throw ModelError("assignment of '" + key + "' must be a list of worlds");
      t.insert(k.world(w.get<std::string>()));
    }
    Position pos = Position::parse(key);
    subformula_at(s.formula, pos);
    s.assignment.emplace(std::move(pos), std::move(t));
  }
  return s;
}

}  // namespace teamlogic
