#include "teamlogic/characteristic.hpp"

#include <algorithm>

#include "teamlogic/errors.hpp"

namespace teamlogic {

namespace {

void push_distinct(std::vector<Formula>& out, const Formula& f) {
  for (const Formula& g : out) {
    if (g == f) return;
  }
  out.push_back(f);
}

Formula rebuild_with(const Formula& f, const Formula& bot_replacement) {
  switch (f.op()) {
    case Op::Bot: return bot_replacement;
    case Op::Top:
    case Op::Prop:
    case Op::NegProp: return f;
    case Op::And: return Formula::conj(rebuild_with(f.child(0), bot_replacement), rebuild_with(f.child(1), bot_replacement));
    case Op::Or: return Formula::disj(rebuild_with(f.child(0), bot_replacement), rebuild_with(f.child(1), bot_replacement));
    case Op::NeDisj:
      return Formula::nedisj(rebuild_with(f.child(0), bot_replacement), rebuild_with(f.child(1), bot_replacement));
    case Op::Dia: return Formula::dia(rebuild_with(f.child(0), bot_replacement));
    case Op::Box: return Formula::box(rebuild_with(f.child(0), bot_replacement));
    case Op::Nab: return Formula::nab(rebuild_with(f.child(0), bot_replacement));
    case Op::Incl: {
      std::vector<Formula> lhs, rhs;
      for (const Formula& a : f.lhs()) lhs.push_back(rebuild_with(a, bot_replacement));
      for (const Formula& a : f.rhs()) rhs.push_back(rebuild_with(a, bot_replacement));
      return Formula::incl(std::move(lhs), std::move(rhs));
    }
  }
  return f;
}

Formula finish(const Formula& f, const KripkeModel& k, const CharOptions& opts) {
  if (opts.bot == BotEncoding::LiteralPair) return encode_bot(f, k.props());
  return f;
}

void require_encodable(const KripkeModel& k, const CharOptions& opts) {
  if (opts.bot == BotEncoding::LiteralPair && k.props().empty()) {
    throw FormulaError("literal-pair encoding of bot needs at least one proposition");
  }
}

}  // namespace

Formula encode_bot(const Formula& f, const std::vector<std::string>& props) {
  if (props.empty()) throw FormulaError("literal-pair encoding of bot needs at least one proposition");
  return rebuild_with(f, Formula::conj(Formula::prop(props.front()), Formula::neg_prop(props.front())));
}

const Formula& HintikkaBuilder::chi(std::size_t w, unsigned depth) {
  if (w >= k_.size()) throw ModelError("world index out of range");
  if (cache_.size() <= depth) cache_.resize(depth + 1);
  if (cache_[depth].empty()) cache_[depth].resize(k_.size());
  if (!cache_[depth][w].has_value()) {
    Formula built = [&] {
      if (depth == 0) {
        std::vector<Formula> literals;
        for (std::size_t p = 0; p < k_.props().size(); ++p) {
          if (k_.valuation(p).contains(w)) literals.push_back(Formula::prop(k_.props()[p]));
        }
        for (std::size_t p = 0; p < k_.props().size(); ++p) {
          if (!k_.valuation(p).contains(w)) literals.push_back(Formula::neg_prop(k_.props()[p]));
        }
        return conjoin(literals);
      }
      std::vector<Formula> successors;
      k_.successors(w).for_each([&](std::size_t v) { push_distinct(successors, chi(v, depth - 1)); });
      std::vector<Formula> conjuncts{chi(w, depth - 1)};
      for (const Formula& s : successors) conjuncts.push_back(Formula::dia(s));
      conjuncts.push_back(Formula::box(disjoin(successors)));
      return conjoin(conjuncts);
    }();
    cache_[depth][w] = std::move(built);
  }
  return *cache_[depth][w];
}

std::vector<Formula> HintikkaBuilder::distinct(const Team& t, unsigned depth) {
  k_.check_team(t);
  std::vector<Formula> out;
  t.for_each([&](std::size_t w) { push_distinct(out, chi(w, depth)); });
  return out;
}

Formula hintikka(const KripkeModel& k, std::size_t w, unsigned depth) {
  HintikkaBuilder b(k);
  return b.chi(w, depth);
}

Formula eta(const KripkeModel& k, const Team& t, unsigned depth, const CharOptions& opts) {
  require_encodable(k, opts);
  HintikkaBuilder b(k);
  return finish(disjoin(b.distinct(t, depth)), k, opts);
}

Formula psi(const KripkeModel& k, const Team& t, unsigned depth, const CharOptions& opts) {
  require_encodable(k, opts);
  HintikkaBuilder b(k);
  std::vector<Formula> chis = b.distinct(t, depth);
  if (chis.empty()) return finish(Formula::bot(), k, opts);
  std::vector<Formula> conjuncts{disjoin(chis)};
  for (std::size_t u = 0; u < chis.size(); ++u) {
    for (std::size_t v = 0; v < chis.size(); ++v) {
      if (opts.minimize && u == v) continue;
      conjuncts.push_back(Formula::incl({chis[u]}, {chis[v]}));
    }
  }
  return finish(conjoin(conjuncts), k, opts);
}

Formula zeta(const KripkeModel& k, const Team& t, unsigned depth, const CharOptions& opts) {
  require_encodable(k, opts);
  HintikkaBuilder b(k);
  std::vector<Formula> chis = b.distinct(t, depth);
  if (chis.empty()) return finish(Formula::bot(), k, opts);
  std::vector<Formula> conjuncts{disjoin(chis)};
  for (const Formula& c : chis) conjuncts.push_back(Formula::nab(c));
  return finish(conjoin(conjuncts), k, opts);
}

Formula characteristic(const KripkeModel& k, const Team& t, unsigned depth, TargetLogic logic,
                       const CharOptions& opts) {
  return logic == TargetLogic::MINC ? psi(k, t, depth, opts) : zeta(k, t, depth, opts);
}

void Synthesizer::add(const KripkeModel& k, const Team& t) {
  if (disjuncts_.empty() && props_.empty()) {
    props_ = k.props();
  } else if (k.props().size() != props_.size() ||
             !std::is_permutation(props_.begin(), props_.end(), k.props().begin())) {
    throw ModelError("synthesis pairs must share one proposition set");
  }
  Formula f = characteristic(k, t, depth_, logic_, opts_);
  if (seen_.insert(f).second) disjuncts_.push_back(std::move(f));
}

Formula Synthesizer::result() const {
  Formula f = disjoin(disjuncts_);
  if (disjuncts_.empty() && opts_.bot == BotEncoding::LiteralPair) return encode_bot(f, props_);
  return f;
}

Formula synthesize(std::span<const std::pair<KripkeModel, Team>> pairs, unsigned depth, TargetLogic logic,
                   const CharOptions& opts) {
  Synthesizer s(depth, logic, opts);
  for (const auto& [k, t] : pairs) s.add(k, t);
  return s.result();
}

}  // namespace teamlogic
