#include "teamlogic/kripke.hpp"

#include <algorithm>
#include <unordered_set>

#include "teamlogic/errors.hpp"
#include "teamlogic/formula.hpp"

namespace teamlogic {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const std::string& n : names) {
    if (n.empty()) throw ModelError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw ModelError(std::string("duplicate ") + what + " '" + n + "'");
  }
}

}  // namespace

KripkeModel::KripkeModel(std::vector<std::string> props, std::vector<std::string> worlds,
                         const std::vector<std::pair<std::string, std::string>>& edges,
                         const std::map<std::string, std::vector<std::string>>& valuation)
    : props_(std::move(props)), worlds_(std::move(worlds)) {
  index_names();
  succ_.assign(worlds_.size(), Team{});
  pred_.assign(worlds_.size(), Team{});
  val_.assign(props_.size(), Team{});
  for (const auto& [from, to] : edges) {
    auto a = find_world(from);
    auto b = find_world(to);
    if (!a) throw ModelError("edge from unknown world '" + from + "'");
    if (!b) throw ModelError("edge to unknown world '" + to + "'");
    succ_[*a].insert(*b);
    pred_[*b].insert(*a);
  }
  for (const auto& [p, members] : valuation) {
    auto pi = find_prop(p);
    if (!pi) throw ModelError("valuation for undeclared proposition '" + p + "'");
    for (const std::string& w : members) {
      auto wi = find_world(w);
      if (!wi) throw ModelError("valuation of '" + p + "' names unknown world '" + w + "'");
      val_[*pi].insert(*wi);
    }
  }
}

KripkeModel KripkeModel::from_indices(std::vector<std::string> props, std::vector<std::string> worlds,
                                      std::span<const Edge> edges, std::vector<Team> valuation) {
  KripkeModel k;
  k.props_ = std::move(props);
  k.worlds_ = std::move(worlds);
  k.index_names();
  if (valuation.size() != k.props_.size()) {
    throw ModelError("valuation size does not match the proposition count");
  }
  for (const Team& t : valuation) k.check_team(t);
  k.val_ = std::move(valuation);
  k.succ_.assign(k.worlds_.size(), Team{});
  k.pred_.assign(k.worlds_.size(), Team{});
  for (auto [a, b] : edges) {
    if (a >= k.worlds_.size() || b >= k.worlds_.size()) throw ModelError("edge index out of range");
    k.succ_[a].insert(b);
    k.pred_[b].insert(a);
  }
  return k;
}

void KripkeModel::index_names() {
  require_unique(props_, "proposition");
  require_unique(worlds_, "world");
  for (const std::string& p : props_) {
    if (!is_identifier(p)) throw ModelError("proposition '" + p + "' is not a valid identifier");
  }
  world_index_.clear();
  prop_index_.clear();
  for (std::size_t i = 0; i < worlds_.size(); ++i) world_index_.emplace(worlds_[i], i);
  for (std::size_t i = 0; i < props_.size(); ++i) prop_index_.emplace(props_[i], i);
}

std::optional<std::size_t> KripkeModel::find_world(std::string_view name) const {
  auto it = world_index_.find(std::string(name));
  if (it == world_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> KripkeModel::find_prop(std::string_view name) const {
  auto it = prop_index_.find(std::string(name));
  if (it == prop_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t KripkeModel::world(std::string_view name) const {
  if (auto w = find_world(name)) return *w;
  throw ModelError("unknown world '" + std::string(name) + "'");
}

std::size_t KripkeModel::prop(std::string_view name) const {
  if (auto p = find_prop(name)) return *p;
  throw ModelError("unknown proposition '" + std::string(name) + "'");
}

std::vector<KripkeModel::Edge> KripkeModel::edges() const {
  std::vector<Edge> out;
  for (std::size_t w = 0; w < succ_.size(); ++w) {
    succ_[w].for_each([&](std::size_t v) { out.emplace_back(w, v); });
  }
  return out;
}

bool KripkeModel::is_identity_relation() const {
  for (std::size_t w = 0; w < succ_.size(); ++w) {
    if (succ_[w] != Team{w}) return false;
  }
  return true;
}

Team KripkeModel::team(std::span<const std::string> names) const {
  Team t;
  for (const std::string& n : names) t.insert(world(n));
  return t;
}

std::vector<std::string> KripkeModel::names(const Team& t) const {
  check_team(t);
  std::vector<std::string> out;
  t.for_each([&](std::size_t w) { out.push_back(worlds_[w]); });
  return out;
}

void KripkeModel::check_team(const Team& t) const {
  if (!owns(t)) {
    throw ModelError("team is not a subset of the model's " + std::to_string(worlds_.size()) +
                     " worlds");
  }
}

Team image(const KripkeModel& k, const Team& t) {
  k.check_team(t);
  Team out;
  t.for_each([&](std::size_t w) { out |= k.successors(w); });
  return out;
}

Team preimage(const KripkeModel& k, const Team& t) {
  k.check_team(t);
  Team out;
  t.for_each([&](std::size_t w) { out |= k.predecessors(w); });
  return out;
}

bool step_rel(const KripkeModel& k, const Team& t, const Team& s) {
  k.check_team(t);
  k.check_team(s);
  return s.subset_of(image(k, t)) && t.subset_of(preimage(k, s));
}

}  // namespace teamlogic
