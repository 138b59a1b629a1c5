#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/kripke.hpp"

namespace teamlogic {

/// Streams every Kripke model with at most `max_worlds` worlds over `props`,
/// each exactly once, with worlds named w0..w{n-1}. No isomorphism
/// reduction.
///
/// Order: by world count, then by valuation mask, then by edge mask. In the
/// valuation mask, proposition i owns bits [i*n, (i+1)*n) and bit j of that
/// block is world j; in the edge mask, bit a*n+b is the edge a -> b.
class ModelStream {
 public:
  ModelStream(std::size_t max_worlds, std::vector<std::string> props);

  std::optional<KripkeModel> next();

  /// Number of models the stream yields: sum over n of 2^(n*n + n*|props|).
  /// Throws BudgetExceeded if it does not fit in 64 bits.
  static std::uint64_t count(std::size_t max_worlds, std::size_t num_props);

 private:
  std::size_t max_worlds_;
  std::vector<std::string> props_;
  std::size_t n_ = 0;
  std::uint64_t val_mask_ = 0;
  std::uint64_t edge_mask_ = 0;
  bool done_ = false;
};

std::vector<KripkeModel> enumerate_models(std::size_t max_worlds, const std::vector<std::string>& props);

/// w0, w1, ..., w{n-1}.
std::vector<std::string> canonical_world_names(std::size_t n);

}  // namespace teamlogic
