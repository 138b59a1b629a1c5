#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace teamlogic {

/// A set of world indices of some Kripke model.
///
/// Teams are plain values: they carry no reference to a model and are
/// validated against one by every operation that takes both. Worlds 0..63
/// live inline; larger indices spill into a heap-allocated tail, so the
/// common small-model case never allocates.
class Team {
 public:
  Team() = default;
  Team(std::initializer_list<std::size_t> worlds);

  static Team full(std::size_t n);
  static Team from_bits(std::uint64_t bits) {
    Team t;
    t.lo_ = bits;
    return t;
  }

  bool contains(std::size_t w) const {
    if (w < 64) return (lo_ >> w) & 1U;
    std::size_t i = w / 64 - 1;
    return i < hi_.size() && ((hi_[i] >> (w % 64)) & 1U);
  }
  void insert(std::size_t w);
  void erase(std::size_t w);

  bool empty() const { return lo_ == 0 && hi_.empty(); }
  std::size_t size() const;

  /// One past the largest member, 0 for the empty team.
  std::size_t bound() const;

  /// Low 64 worlds as a bit mask; exact when bound() <= 64.
  std::uint64_t low_bits() const { return lo_; }
  bool fits_word() const { return hi_.empty(); }

  bool subset_of(const Team& other) const;
  bool intersects(const Team& other) const;

  Team& operator|=(const Team& other);
  Team& operator&=(const Team& other);
  Team& operator-=(const Team& other);
  friend Team operator|(Team a, const Team& b) { return a |= b; }
  friend Team operator&(Team a, const Team& b) { return a &= b; }
  friend Team operator-(Team a, const Team& b) { return a -= b; }

  friend bool operator==(const Team&, const Team&) = default;
  /// Orders by the numeric value of the membership bit vector.
  friend std::strong_ordering operator<=>(const Team& a, const Team& b);

  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t bits = lo_; bits != 0; bits &= bits - 1) {
      f(static_cast<std::size_t>(std::countr_zero(bits)));
    }
    for (std::size_t i = 0; i < hi_.size(); ++i) {
      for (std::uint64_t bits = hi_[i]; bits != 0; bits &= bits - 1) {
        f(64 * (i + 1) + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  std::size_t hash() const;

 private:
  void trim();

  std::uint64_t lo_ = 0;
  std::vector<std::uint64_t> hi_;
};

/// Subset of `team` selected by `mask`, where bit i of the mask picks the
/// i-th smallest member.
Team subteam_from_mask(const std::vector<std::size_t>& members, std::uint64_t mask);

/// Calls `f(subteam)` for every subset of `team`, in increasing mask order
/// (bit i of the mask is the i-th smallest member). Stops early when `f`
/// returns true and reports whether it did. Teams with more than 62 members
/// cannot be enumerated and raise BudgetExceeded.
bool any_subteam(const Team& team, const std::function<bool(const Team&)>& f);

/// Subsets of `team` ordered by increasing size, ties by mask order.
std::vector<Team> subteams_by_size(const Team& team);

}  // namespace teamlogic

template <>
struct std::hash<teamlogic::Team> {
  std::size_t operator()(const teamlogic::Team& t) const noexcept { return t.hash(); }
};
