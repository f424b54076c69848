#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indrep/analysis.hpp"
#include "indrep/certificate.hpp"
#include "indrep/linear_groups.hpp"
#include "indrep/module.hpp"
#include "indrep/search.hpp"

namespace indrep::app {

/// Published SL(2,5) data, keyed by the published row and column names.
struct Sl25Fixture {
  /// 1, z, c, d, zc, zd, a, b, b^2.
  std::vector<std::string> class_names;
  std::vector<std::string> row_names;
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<std::string> subgroup_names;
  std::vector<std::size_t> subgroup_orders;
  std::vector<std::string> fixed_row_names;
  std::vector<std::vector<long long>> fixed;
  using Terms = std::vector<std::pair<long long, std::string>>;
  Terms U, V;
};
const Sl25Fixture& sl25_fixture();

using LabelMap = std::map<std::string, std::size_t>;

/// SL(2,5) with its analysis and the translation of published names.
struct Sl25Context {
  LinearGroups linear;
  AnalysisPtr analysis;
  /// Published class column -> class of the analysed group.
  std::vector<std::uint32_t> column_class;
  /// Published subgroup column -> lattice class.
  std::vector<std::uint32_t> subgroup_class;
  /// Published row -> real irreducible with identical values, when one exists.
  LabelMap exact;
  std::vector<std::string> unmatched;
};
const Sl25Context& sl25_context();

/// Class columns for a group containing SL(2,5) on its first 24 points.
std::vector<std::uint32_t> sl25_columns(const FiniteGroup& N);
/// Exact value matching of the published rows against the real irreducibles of A.
LabelMap match_rows(const GroupAnalysis& A, const std::vector<std::uint32_t>& columns,
                    std::vector<std::string>* unmatched = nullptr);
/// Module from published terms; nullopt if some name is not in `labels`.
std::optional<VirtualModule> build_module(const GroupAnalysis& A, const Sl25Fixture::Terms& terms,
                                          const LabelMap& labels, std::string* missing = nullptr);
/// Assignments of the degree-4 published names to the degree-4 real
/// irreducibles under which the published pair is Smith matched and oriented.
std::vector<LabelMap> repaired_labels(const GroupAnalysis& A, const LabelMap& exact);
std::string describe_labels(const GroupAnalysis& A, const LabelMap& labels, const std::vector<std::string>& names);

struct MonoSweepRow {
  std::uint64_t q = 0;
  bool mono_complex = false;
  bool mono_real = false;
  std::optional<std::string> complex_witness, real_witness;
};
MonoSweepRow sl2gl2_row(std::uint64_t q);

struct Claim {
  std::string anchor;
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

struct ClaimOptions {
  bool waive_orientability = false;
  std::size_t search_cap = 200'000'000;
};

std::vector<Claim> claims_mono_sweep();
std::vector<Claim> claims_sl25_tables();
std::vector<Claim> claims_sl25_pair(const ClaimOptions& opts = {});
std::vector<Claim> claims_po_ranks();
std::vector<Claim> claims_normal_mono();
std::vector<Claim> claims_certificate(const ClaimOptions& opts = {});

}  // namespace indrep::app
