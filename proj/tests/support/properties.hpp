#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace indrep::testing {

struct SuiteResult {
  std::size_t instances = 0;
  std::size_t violations = 0;
  /// Detail lines, capped.
  std::vector<std::string> messages;
  void fail(const std::string& what);
  bool ok() const { return violations == 0; }
};

/// Corpus entry names with order at most `max_order`, skipping aliases.
std::vector<std::string> corpus_names(std::size_t max_order);

/// Class criteria (mono_complex, mono_real) against exact induction ranks.
SuiteResult criterion_rank_suite(std::size_t max_order, std::size_t random_pairs, std::uint64_t seed);
/// Frobenius reciprocity and the transversal induction oracle on every subgroup class.
SuiteResult frobenius_suite(std::size_t max_order);
SuiteResult orthogonality_suite();
/// Integrality, range and monotonicity of fixed-point dimensions.
SuiteResult fixed_dim_suite();
/// dim Ind(V)^K = [G:N] |K n N| / |K| dim V^(K n N) for normal N with injective real induction.
SuiteResult dimension_formula_suite();
/// Induction maps reduced PO(N) into reduced PO(G).
SuiteResult reduced_po_suite(std::size_t samples, std::uint64_t seed);
SuiteResult lattice_suite(std::size_t max_order);

}  // namespace indrep::testing
