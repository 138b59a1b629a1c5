#include "teamlogic/bisimulation.hpp"

#include <algorithm>

#include "teamlogic/errors.hpp"

namespace teamlogic {

BisimChecker::BisimChecker(const KripkeModel& left, const KripkeModel& right)
    : left_(left), right_(right) {
  if (left.props().size() != right.props().size()) {
    throw ModelError("bisimulation requires models over the same propositions");
  }
  prop_map_.reserve(left.props().size());
  for (const std::string& p : left.props()) {
    auto q = right.find_prop(p);
    if (!q) throw ModelError("bisimulation requires models over the same propositions");
    prop_map_.push_back(*q);
  }
}

bool BisimChecker::atoms_agree(std::size_t w, std::size_t w2) const {
  for (std::size_t p = 0; p < prop_map_.size(); ++p) {
    if (left_.valuation(p).contains(w) != right_.valuation(prop_map_[p]).contains(w2)) return false;
  }
  return true;
}

bool BisimChecker::bisimilar(std::size_t w, std::size_t w2, unsigned k) {
  if (w >= left_.size() || w2 >= right_.size()) throw ModelError("world index out of range");
  if (memo_.size() <= k) memo_.resize(k + 1);
  auto& level = memo_[k];
  if (level.empty()) level.assign(left_.size() * right_.size(), 0);
  std::uint8_t& slot = level[w * right_.size() + w2];
  if (slot != 0) return slot == 2;

  bool result = atoms_agree(w, w2);
  if (result && k > 0) {
    // forth: every successor of w is matched by some successor of w2
    left_.successors(w).for_each([&](std::size_t v) {
      if (!result) return;
      bool found = false;
      right_.successors(w2).for_each([&](std::size_t v2) {
        if (!found && bisimilar(v, v2, k - 1)) found = true;
      });
      result = found;
    });
  }
  if (result && k > 0) {
    // back
    right_.successors(w2).for_each([&](std::size_t v2) {
      if (!result) return;
      bool found = false;
      left_.successors(w).for_each([&](std::size_t v) {
        if (!found && bisimilar(v, v2, k - 1)) found = true;
      });
      result = found;
    });
  }
  // The recursive calls may have grown memo_, so re-index instead of using `slot`.
  memo_[k][w * right_.size() + w2] = result ? 2 : 1;
  return result;
}

bool BisimChecker::team_bisimilar(const Team& t, const Team& t2, unsigned k) {
  left_.check_team(t);
  right_.check_team(t2);
  bool ok = true;
  t.for_each([&](std::size_t w) {
    if (!ok) return;
    bool found = false;
    t2.for_each([&](std::size_t w2) {
      if (!found && bisimilar(w, w2, k)) found = true;
    });
    ok = found;
  });
  if (!ok) return false;
  t2.for_each([&](std::size_t w2) {
    if (!ok) return;
    bool found = false;
    t.for_each([&](std::size_t w) {
      if (!found && bisimilar(w, w2, k)) found = true;
    });
    ok = found;
  });
  return ok;
}

std::vector<std::size_t> BisimTypes::classes(const KripkeModel& k, unsigned depth) {
  std::vector<std::size_t> prop_index;
  prop_index.reserve(props_.size());
  if (k.props().size() != props_.size()) throw ModelError("model propositions differ from the interner's");
  for (const std::string& p : props_) {
    auto q = k.find_prop(p);
    if (!q) throw ModelError("model propositions differ from the interner's");
    prop_index.push_back(*q);
  }
  auto intern = [&](Key key) {
    auto [it, fresh] = ids_.try_emplace(std::move(key), ids_.size());
    return it->second;
  };
  std::vector<std::size_t> current(k.size());
  for (std::size_t w = 0; w < k.size(); ++w) {
    std::vector<std::size_t> atoms{0};
    for (std::size_t i = 0; i < prop_index.size(); ++i) atoms.push_back(k.valuation(prop_index[i]).contains(w));
    current[w] = intern({std::move(atoms), {}});
  }
  for (unsigned level = 1; level <= depth; ++level) {
    std::vector<std::size_t> next(k.size());
    for (std::size_t w = 0; w < k.size(); ++w) {
      std::vector<std::size_t> succ;
      k.successors(w).for_each([&](std::size_t v) { succ.push_back(current[v]); });
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      // the previous-level type carries the atoms
      next[w] = intern({{level, current[w]}, std::move(succ)});
    }
    current = std::move(next);
  }
  return current;
}

std::vector<std::size_t> BisimTypes::signature(const std::vector<std::size_t>& classes, const Team& t) const {
  std::vector<std::size_t> out;
  t.for_each([&](std::size_t w) { out.push_back(classes.at(w)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool k_bisimilar(const KripkeModel& k, std::size_t w, const KripkeModel& k2, std::size_t w2, unsigned depth) {
  BisimChecker checker(k, k2);
  return checker.bisimilar(w, w2, depth);
}

bool team_k_bisimilar(const KripkeModel& k, const Team& t, const KripkeModel& k2, const Team& t2,
                      unsigned depth) {
  BisimChecker checker(k, k2);
  return checker.team_bisimilar(t, t2, depth);
}

}  // namespace teamlogic
