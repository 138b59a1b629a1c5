#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "teamlogic/kripke.hpp"

namespace teamlogic {

/// Bounded bisimilarity between the worlds of two models over the same
/// proposition set, by memoized recursion on (w, w', k).
///
/// Both models must outlive the checker. Proposition sets are matched by
/// name; models over different sets raise ModelError.
class BisimChecker {
 public:
  BisimChecker(const KripkeModel& left, const KripkeModel& right);

  /// K, w <->_k K', w'.
  bool bisimilar(std::size_t w, std::size_t w2, unsigned k);

  /// Team k-bisimilarity: every member of `t` has a k-bisimilar partner in
  /// `t2` and vice versa.
  bool team_bisimilar(const Team& t, const Team& t2, unsigned k);

 private:
  bool atoms_agree(std::size_t w, std::size_t w2) const;

  const KripkeModel& left_;
  const KripkeModel& right_;
  std::vector<std::size_t> prop_map_;  // left prop index -> right prop index
  // memo_[k][w * |W'| + w']: 0 unknown, 1 false, 2 true
  std::vector<std::vector<std::uint8_t>> memo_;
};

/// Assigns each world of any model over a fixed proposition set an id for
/// its k-bisimulation class. Ids are shared across every model passed to
/// the same interner: two worlds get equal ids exactly when they are
/// k-bisimilar. Types are built bottom-up as (atoms, set of successor
/// types), so the cost is linear in the model for each level.
class BisimTypes {
 public:
  explicit BisimTypes(std::vector<std::string> props) : props_(std::move(props)) {}

  /// Class id of every world of `k` at depth `depth`, indexed by world.
  std::vector<std::size_t> classes(const KripkeModel& k, unsigned depth);

  /// Sorted, duplicate-free class ids of the members of `t`. Two teams are
  /// team k-bisimilar iff their signatures are equal.
  std::vector<std::size_t> signature(const std::vector<std::size_t>& classes, const Team& t) const;

  std::size_t class_count() const { return ids_.size(); }

 private:
  using Key = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

  std::vector<std::string> props_;
  // level 0: ({0, atoms...}, {}); level j: ({j, type at j-1}, successor types)
  std::map<Key, std::size_t> ids_;
};

bool k_bisimilar(const KripkeModel& k, std::size_t w, const KripkeModel& k2, std::size_t w2, unsigned depth);

bool team_k_bisimilar(const KripkeModel& k, const Team& t, const KripkeModel& k2, const Team& t2,
                      unsigned depth);

}  // namespace teamlogic
