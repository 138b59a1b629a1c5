#include "teamlogic/team.hpp"

#include <algorithm>

#include "teamlogic/errors.hpp"

namespace teamlogic {

Team::Team(std::initializer_list<std::size_t> worlds) {
  for (std::size_t w : worlds) insert(w);
}

Team Team::full(std::size_t n) {
  Team t;
  if (n >= 64) {
    t.lo_ = ~std::uint64_t{0};
    std::size_t rest = n - 64;
    t.hi_.assign(rest / 64, ~std::uint64_t{0});
    if (rest % 64 != 0) t.hi_.push_back((std::uint64_t{1} << (rest % 64)) - 1);
  } else if (n > 0) {
    t.lo_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  t.trim();
  return t;
}

void Team::insert(std::size_t w) {
  if (w < 64) {
    lo_ |= std::uint64_t{1} << w;
    return;
  }
  std::size_t i = w / 64 - 1;
  if (hi_.size() <= i) hi_.resize(i + 1, 0);
  hi_[i] |= std::uint64_t{1} << (w % 64);
}

void Team::erase(std::size_t w) {
  if (w < 64) {
    lo_ &= ~(std::uint64_t{1} << w);
    return;
  }
  std::size_t i = w / 64 - 1;
  if (i < hi_.size()) {
    hi_[i] &= ~(std::uint64_t{1} << (w % 64));
    trim();
  }
}

std::size_t Team::size() const {
  std::size_t n = static_cast<std::size_t>(std::popcount(lo_));
  for (std::uint64_t word : hi_) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

std::size_t Team::bound() const {
  if (!hi_.empty()) {
    return 64 * hi_.size() + 64 - static_cast<std::size_t>(std::countl_zero(hi_.back()));
  }
  return 64 - static_cast<std::size_t>(std::countl_zero(lo_));
}

bool Team::subset_of(const Team& other) const {
  if ((lo_ & ~other.lo_) != 0) return false;
  if (hi_.size() > other.hi_.size()) return false;
  for (std::size_t i = 0; i < hi_.size(); ++i) {
    if ((hi_[i] & ~other.hi_[i]) != 0) return false;
  }
  return true;
}

bool Team::intersects(const Team& other) const {
  if ((lo_ & other.lo_) != 0) return true;
  std::size_t n = std::min(hi_.size(), other.hi_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((hi_[i] & other.hi_[i]) != 0) return true;
  }
  return false;
}

Team& Team::operator|=(const Team& other) {
  lo_ |= other.lo_;
  if (hi_.size() < other.hi_.size()) hi_.resize(other.hi_.size(), 0);
  for (std::size_t i = 0; i < other.hi_.size(); ++i) hi_[i] |= other.hi_[i];
  return *this;
}

Team& Team::operator&=(const Team& other) {
  lo_ &= other.lo_;
  if (hi_.size() > other.hi_.size()) hi_.resize(other.hi_.size());
  for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] &= other.hi_[i];
  trim();
  return *this;
}

Team& Team::operator-=(const Team& other) {
  lo_ &= ~other.lo_;
  std::size_t n = std::min(hi_.size(), other.hi_.size());
  for (std::size_t i = 0; i < n; ++i) hi_[i] &= ~other.hi_[i];
  trim();
  return *this;
}

std::strong_ordering operator<=>(const Team& a, const Team& b) {
  if (a.hi_.size() != b.hi_.size()) return a.hi_.size() <=> b.hi_.size();
  for (std::size_t i = a.hi_.size(); i-- > 0;) {
    if (a.hi_[i] != b.hi_[i]) return a.hi_[i] <=> b.hi_[i];
  }
  return a.lo_ <=> b.lo_;
}

std::vector<std::size_t> Team::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t w) { out.push_back(w); });
  return out;
}

std::size_t Team::hash() const {
  std::uint64_t h = lo_ * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t word : hi_) {
    h ^= word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

void Team::trim() {
  while (!hi_.empty() && hi_.back() == 0) hi_.pop_back();
}

Team subteam_from_mask(const std::vector<std::size_t>& members, std::uint64_t mask) {
  Team t;
  for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
    t.insert(members[static_cast<std::size_t>(std::countr_zero(bits))]);
  }
  return t;
}

bool any_subteam(const Team& team, const std::function<bool(const Team&)>& f) {
  std::vector<std::size_t> members = team.members();
  if (members.size() > 62) {
    throw BudgetExceeded("cannot enumerate subteams of a team with " +
                         std::to_string(members.size()) + " members");
  }
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (f(subteam_from_mask(members, mask))) return true;
  }
  return false;
}

std::vector<Team> subteams_by_size(const Team& team) {
  std::vector<std::size_t> members = team.members();
  if (members.size() > 24) {
    throw BudgetExceeded("cannot list subteams of a team with " +
                         std::to_string(members.size()) + " members");
  }
  const std::uint64_t count = std::uint64_t{1} << members.size();
  std::vector<std::uint64_t> masks(count);
  for (std::uint64_t m = 0; m < count; ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<Team> out;
  out.reserve(count);
  for (std::uint64_t m : masks) out.push_back(subteam_from_mask(members, m));
  return out;
}

}  // namespace teamlogic
