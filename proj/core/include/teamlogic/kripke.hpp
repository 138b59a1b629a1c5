#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "teamlogic/team.hpp"

namespace teamlogic {

/// Finite Kripke model (W, R, V) over an ordered proposition set.
///
/// Worlds and propositions are addressed by dense indices in declaration
/// order; names are kept for I/O. Immutable after construction.
class KripkeModel {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  KripkeModel() = default;

  /// Validating constructor over names. Unknown worlds or propositions and
  /// duplicate declarations raise ModelError. Propositions missing from
  /// `valuation` are false everywhere.
  KripkeModel(std::vector<std::string> props, std::vector<std::string> worlds,
              const std::vector<std::pair<std::string, std::string>>& edges,
              const std::map<std::string, std::vector<std::string>>& valuation);

  /// Index-based constructor. `valuation[i]` is the extension of props[i].
  static KripkeModel from_indices(std::vector<std::string> props, std::vector<std::string> worlds,
                                  std::span<const Edge> edges, std::vector<Team> valuation);

  std::size_t size() const { return worlds_.size(); }
  const std::vector<std::string>& props() const { return props_; }
  const std::vector<std::string>& worlds() const { return worlds_; }

  std::optional<std::size_t> find_world(std::string_view name) const;
  std::optional<std::size_t> find_prop(std::string_view name) const;
  /// Throws ModelError for unknown names.
  std::size_t world(std::string_view name) const;
  std::size_t prop(std::string_view name) const;

  const Team& successors(std::size_t w) const { return succ_[w]; }
  const Team& predecessors(std::size_t w) const { return pred_[w]; }
  const Team& valuation(std::size_t prop) const { return val_[prop]; }
  /// Edges sorted by (source, target).
  std::vector<Edge> edges() const;
  bool has_edge(std::size_t from, std::size_t to) const { return succ_[from].contains(to); }
  bool is_identity_relation() const;

  Team all() const { return Team::full(worlds_.size()); }
  /// Team of the named worlds. Throws ModelError for unknown names.
  Team team(std::span<const std::string> names) const;
  /// Names of the members, in world order.
  std::vector<std::string> names(const Team& t) const;
  /// Throws ModelError unless `t` is a subset of the worlds.
  void check_team(const Team& t) const;
  bool owns(const Team& t) const { return t.bound() <= worlds_.size(); }

 private:
  void index_names();

  std::vector<std::string> props_;
  std::vector<std::string> worlds_;
  std::vector<Team> succ_;
  std::vector<Team> pred_;
  std::vector<Team> val_;
  std::unordered_map<std::string, std::size_t> world_index_;
  std::unordered_map<std::string, std::size_t> prop_index_;
};

/// A world of a model.
struct PointedModel {
  const KripkeModel* model;
  std::size_t world;
};

/// R[T]: worlds reachable in one step from some member of `t`.
Team image(const KripkeModel& k, const Team& t);
/// R^-1[T]: worlds with a successor in `t`.
Team preimage(const KripkeModel& k, const Team& t);
/// T[R]S: S is within R[T] and every member of T has a successor in S.
bool step_rel(const KripkeModel& k, const Team& t, const Team& s);

}  // namespace teamlogic
