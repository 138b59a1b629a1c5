#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/kripke.hpp"

namespace teamlogic {

enum class EvalMode : std::uint8_t {
  /// Literal truth conditions: every split, successor team and subteam is
  /// searched explicitly.
  Reference,
  /// Maximal-subteam fixpoints; relies on union closure and the empty team
  /// property, validated against Reference.
  Optimized,
};

enum class Semantics : std::uint8_t { Lax, Strict };

struct EvalConfig {
  EvalMode mode = EvalMode::Optimized;
  bool memo_enabled = true;
  /// Cap on evaluation steps (recursive (subformula, team) visits) per query.
  std::uint64_t max_steps = 10'000'000;
  /// Only Lax is implemented; Strict is rejected with UnsupportedSemantics.
  Semantics semantics = Semantics::Lax;
};

/// Team-semantics evaluation session bound to one model.
///
/// Memo tables live as long as the session and are keyed by (subformula
/// node, team), so repeated queries over the same model share work. The
/// model must outlive the evaluator. Not thread-safe; use one evaluator per
/// thread.
class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& k, EvalConfig config = {});

  /// K, T |= f under lax semantics.
  bool eval(const Team& t, const Formula& f);

  /// The largest S within T with K, S |= f. Requires a union-closed
  /// dialect; Mixed formulas are accepted in Reference mode only.
  Team max_subteam(const Team& t, const Formula& f);

  /// Every team of the model satisfying f, in increasing bit-vector order.
  /// Models with more than 24 worlds raise BudgetExceeded.
  std::vector<Team> satisfying_teams(const Formula& f);

  const KripkeModel& model() const { return k_; }
  const EvalConfig& config() const { return config_; }
  std::uint64_t last_steps() const { return steps_; }

 private:
  struct Key {
    const void* node;
    Team team;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  void prepare(const Team& t, const Formula& f);
  void tick();

  bool reference(const Formula& f, const Team& t);
  bool reference_uncached(const Formula& f, const Team& t);
  bool reference_split(const Formula& a, const Formula& b, const Team& t, bool nonempty);
  bool reference_incl(const Formula& f, const Team& t);

  bool holds(const Formula& f, const Team& t);
  Team maximal(const Formula& f, const Team& t);
  Team maximal_uncached(const Formula& f, const Team& t);
  Team maximal_incl(const Formula& f, const Team& t);
  const Team& truth_set(const Formula& f);
  Team compute_truth_set(const Formula& f);

  const Team& prop_extension(const Formula& literal) const;

  const KripkeModel& k_;
  EvalConfig config_;
  std::uint64_t steps_ = 0;
  Team all_;
  std::vector<Formula> keep_alive_;
  std::unordered_set<const void*> validated_;
  std::unordered_map<Key, bool, KeyHash> ref_memo_;
  std::unordered_map<Key, Team, KeyHash> max_memo_;
  std::unordered_map<const void*, Team> truth_;
};

bool eval(const KripkeModel& k, const Team& t, const Formula& f, const EvalConfig& config = {});

/// Single-world Kripke semantics; f must be a pure modal formula.
bool eval_point(const KripkeModel& k, std::size_t world, const Formula& f);

std::vector<Team> satisfying_teams(const KripkeModel& k, const Formula& f, const EvalConfig& config = {});

Team max_subteam(const KripkeModel& k, const Team& t, const Formula& f, const EvalConfig& config = {});

}  // namespace teamlogic
