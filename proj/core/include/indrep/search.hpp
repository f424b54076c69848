#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indrep/smith.hpp"

namespace indrep {

struct SearchOptions {
  long long max_dim = 64;
  /// Candidate modules examined before SearchBudgetExceeded.
  std::size_t node_cap = 200'000'000;
  bool waive_orientability = false;
};

struct SearchResult {
  /// Least dimension with a Smith matched (and oriented) pair, if any up to max_dim.
  std::optional<long long> min_dim;
  /// Pairs of that dimension, U ahead of V in coordinate order, sorted.
  std::vector<std::pair<VirtualModule, VirtualModule>> pairs;
  /// Rank of the difference lattice searched (reduced PO with large vanishing).
  std::size_t lattice_rank = 0;
  std::size_t differences = 0;
  std::size_t nodes = 0;
};

SearchResult smith_search(const GroupAnalysis& A, const SearchOptions& opts = {});

struct GapResult {
  bool gap = false;
  /// Lattice class in both the P and L families, when one exists.
  std::optional<std::uint32_t> p_and_large;
  std::optional<VirtualModule> witness;
  std::size_t nodes = 0;
  std::string reason;
};

GapResult gap_group_check(const GroupAnalysis& A, long long dim_cap = 64, std::size_t node_cap = 50'000'000);

}  // namespace indrep
