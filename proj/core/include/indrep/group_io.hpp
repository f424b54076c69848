#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "indrep/group.hpp"

namespace indrep {

struct GroupSpec {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

/// Parses the group text format: `degree N`, then one generator per line in
/// 1-based cycle notation. `#` starts a comment; blank lines are ignored.
/// Errors are ParseError with a "line K:" prefix.
GroupSpec parse_group_spec(std::string_view text);
GroupSpec read_group_file(const std::filesystem::path& path);
std::string format_group_spec(const GroupSpec& spec, std::string_view comment = {});

FiniteGroup build_group(const GroupSpec& spec, const GroupOptions& opts = {});

}  // namespace indrep
