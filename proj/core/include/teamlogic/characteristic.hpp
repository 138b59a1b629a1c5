#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <string>
#include <utility>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/kripke.hpp"

namespace teamlogic {

/// How the always-false-on-nonempty-teams formula is written.
enum class BotEncoding : std::uint8_t {
  Constant,     ///< `bot`
  LiteralPair,  ///< `p & ~p` for the first proposition; needs a nonempty Phi
};

/// Which logic a characteristic formula lives in.
enum class TargetLogic : std::uint8_t { MINC, MLNab };

struct CharOptions {
  BotEncoding bot = BotEncoding::Constant;
  /// Drop the trivially valid atoms [chi <= chi] from inclusion characteristic
  /// formulas.
  bool minimize = false;
};

/// Builds depth-k Hintikka formulas for the worlds of one model, sharing
/// subformulas across worlds and depths. The model must outlive the builder.
class HintikkaBuilder {
 public:
  explicit HintikkaBuilder(const KripkeModel& k) : k_(k) {}

  /// chi^k of (K, w): the literal conjunction at depth 0; at depth k+1
  /// chi^k & dia chi^k_v (one per distinct successor formula) &
  /// box (disjunction of the distinct successor formulas). Empty
  /// conjunctions of diamonds are omitted; an empty disjunction is `bot`.
  const Formula& chi(std::size_t w, unsigned depth);

  /// Distinct chi^k of the members of `t`, in world order.
  std::vector<Formula> distinct(const Team& t, unsigned depth);

 private:
  const KripkeModel& k_;
  std::vector<std::vector<std::optional<Formula>>> cache_;  // cache_[depth][world]
};

Formula hintikka(const KripkeModel& k, std::size_t w, unsigned depth);

/// Disjunction of the distinct Hintikka formulas of T; `bot` for T empty.
/// K', T' |= eta iff every member of T' is k-bisimilar to some member of T.
Formula eta(const KripkeModel& k, const Team& t, unsigned depth, const CharOptions& opts = {});

/// eta & [chi_u <= chi_v] for all ordered pairs of distinct Hintikka
/// formulas (u outer, v inner); `bot` for T empty. K', T' |= psi iff
/// T' is empty or (K, T) and (K', T') are team k-bisimilar.
Formula psi(const KripkeModel& k, const Team& t, unsigned depth, const CharOptions& opts = {});

/// eta & nab chi_w for every distinct Hintikka formula; `bot` for T empty.
/// Same contract as psi.
Formula zeta(const KripkeModel& k, const Team& t, unsigned depth, const CharOptions& opts = {});

/// Characteristic formula of (K, T) in the requested logic.
Formula characteristic(const KripkeModel& k, const Team& t, unsigned depth, TargetLogic logic,
                       const CharOptions& opts = {});

/// Accumulates the disjunction of characteristic formulas of sample pairs
/// (K, T), dropping structurally equal duplicates. The result is satisfied
/// by (K', T') iff T' is a union of subteams each empty or team
/// k-bisimilar to a listed pair.
class Synthesizer {
 public:
  Synthesizer(unsigned depth, TargetLogic logic, CharOptions opts = {})
      : depth_(depth), logic_(logic), opts_(opts) {}

  void add(const KripkeModel& k, const Team& t);
  /// `bot` (satisfied exactly by the empty team) when nothing was added.
  Formula result() const;
  std::size_t distinct_disjuncts() const { return disjuncts_.size(); }

 private:
  unsigned depth_;
  TargetLogic logic_;
  CharOptions opts_;
  std::vector<Formula> disjuncts_;
  std::unordered_set<Formula> seen_;
  std::vector<std::string> props_;
};

Formula synthesize(std::span<const std::pair<KripkeModel, Team>> pairs, unsigned depth, TargetLogic logic,
                   const CharOptions& opts = {});

/// Replaces every `bot` by `p & ~p` for the first proposition of `props`.
/// Throws FormulaError when `props` is empty.
Formula encode_bot(const Formula& f, const std::vector<std::string>& props);

}  // namespace teamlogic
