#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "indrep/analysis.hpp"
#include "indrep/group.hpp"

namespace indrep::app {

struct CorpusEntry {
  std::string name;
  std::string description;
  /// Expected fingerprint.
  std::size_t order = 0;
  std::size_t nclasses = 0;
  /// Group file text; empty when `factors` or `make` is used.
  std::string spec;
  /// Direct product of these entries, points of the first factor first.
  std::vector<std::string> factors;
  std::function<FiniteGroup(const GroupOptions&)> make;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_entry(const std::string& name);

struct LoadedGroup {
  std::string name;
  GroupPtr group;
  /// Outer-product table for direct products of corpus entries.
  std::optional<CharacterTable> table;
};

/// Builds an entry and rejects it unless order and class count match.
LoadedGroup load_entry(const CorpusEntry& e, const GroupOptions& opts = {});

/// A corpus name, `sl2:q`, `gl2:q`, `C<n>`, or a path to a group file.
LoadedGroup load_group(const std::string& arg, const GroupOptions& opts = {});

AnalysisPtr analyze(const LoadedGroup& g, const AnalysisOptions& opts = {});

}  // namespace indrep::app
