#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indrep/search.hpp"

namespace indrep {

struct CertificateOptions {
  bool waive_orientability = false;
  SearchOptions search;
};

struct CertificateReport {
  OliverVerdict oliver;
  MonoVerdict mono;
  VirtualModule U_N, V_N;
  SmithReport on_N;
  VirtualModule U_G, V_G;
  SmithReport on_G;
  /// The induced pair was replaced by (U+U, U+V) to repair orientability.
  bool doubled = false;
  long long index = 1;
  long long dimension = 0;
  /// [G:N] dim U and twice that.
  long long sphere_undoubled = 0;
  long long sphere_doubled = 0;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Checks the hypotheses of the induction theorem for N normal in G: G Oliver,
/// real induction injective, (U, V) Smith matched on N, and the induced pair
/// Smith matched and P-oriented on G. Without (U, V) a pair is searched on N.
CertificateReport induction_certificate(const GroupAnalysis& G, const Embedded& N_in_G, const GroupAnalysis& N,
                                        std::optional<std::pair<VirtualModule, VirtualModule>> pair,
                                        const CertificateOptions& opts = {});

struct NormalMonoEntry {
  Subgroup subgroup;
  Fingerprint fingerprint;
  /// Passing normal subgroups sharing this fingerprint.
  std::size_t count = 1;
};

/// Proper nontrivial normal subgroups with injective real induction, one per fingerprint.
std::vector<NormalMonoEntry> normal_mono_set(const FiniteGroup& G);

}  // namespace indrep
