#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/kripke.hpp"

namespace teamlogic {

struct NamedTeam {
  std::string name;
  Team team;
};

/// A model file: one model plus named teams, in document order.
struct ModelDocument {
  KripkeModel model;
  std::vector<NamedTeam> teams;

  /// Throws ModelError if no team has this name.
  const Team& team(std::string_view name) const;
};

/// Reads the JSON model format
///
///     { "props": [..], "worlds": [..], "edges": [[from, to], ..],
///       "valuation": {prop: [world, ..]}, "teams": {name: [world, ..]} }
///
/// "edges", "valuation" and "teams" may be omitted. Throws ModelError on
/// malformed input or dangling references.
ModelDocument load_model(std::string_view json_text);
ModelDocument load_model_file(const std::filesystem::path& path);

/// Canonical JSON: fixed key order, every proposition listed in the
/// valuation, edges and team members in world order, two-space indent and a
/// trailing newline. load_model(save_model(..)) reproduces the inputs.
std::string save_model(const KripkeModel& k, std::span<const NamedTeam> teams = {});

}  // namespace teamlogic
