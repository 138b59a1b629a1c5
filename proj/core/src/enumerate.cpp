#include "teamlogic/enumerate.hpp"

#include "teamlogic/errors.hpp"

namespace teamlogic {

namespace {

constexpr std::size_t kMaxBits = 62;

std::size_t val_bits(std::size_t n, std::size_t num_props) { return n * num_props; }
std::size_t edge_bits(std::size_t n) { return n * n; }

}  // namespace

std::vector<std::string> canonical_world_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

ModelStream::ModelStream(std::size_t max_worlds, std::vector<std::string> props)
    : max_worlds_(max_worlds), props_(std::move(props)) {
  if (val_bits(max_worlds, props_.size()) + edge_bits(max_worlds) > kMaxBits) {
    throw BudgetExceeded("model enumeration domain is too large");
  }
}

std::uint64_t ModelStream::count(std::size_t max_worlds, std::size_t num_props) {
  std::uint64_t total = 0;
  for (std::size_t n = 0; n <= max_worlds; ++n) {
    std::size_t bits = val_bits(n, num_props) + edge_bits(n);
    if (bits > kMaxBits) throw BudgetExceeded("model enumeration domain is too large");
    total += std::uint64_t{1} << bits;
  }
  return total;
}

std::optional<KripkeModel> ModelStream::next() {
  if (done_) return std::nullopt;
  const std::size_t n = n_;
  std::vector<Team> valuation(props_.size());
  for (std::size_t p = 0; p < props_.size(); ++p) {
    valuation[p] = Team::from_bits((val_mask_ >> (p * n)) & ((std::uint64_t{1} << n) - 1));
  }
  std::vector<KripkeModel::Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((edge_mask_ >> (a * n + b)) & 1U) edges.emplace_back(a, b);
    }
  }
  KripkeModel k = KripkeModel::from_indices(props_, canonical_world_names(n), edges, std::move(valuation));

  // Advance: edge mask fastest, then valuation, then world count.
  if (++edge_mask_ >= (std::uint64_t{1} << edge_bits(n))) {
    edge_mask_ = 0;
    if (++val_mask_ >= (std::uint64_t{1} << val_bits(n, props_.size()))) {
      val_mask_ = 0;
      if (++n_ > max_worlds_) done_ = true;
    }
  }
  return k;
}

std::vector<KripkeModel> enumerate_models(std::size_t max_worlds, const std::vector<std::string>& props) {
  std::vector<KripkeModel> out;
  out.reserve(ModelStream::count(max_worlds, props.size()));
  ModelStream stream(max_worlds, props);
  while (auto k = stream.next()) out.push_back(std::move(*k));
  return out;
}

}  // namespace teamlogic
