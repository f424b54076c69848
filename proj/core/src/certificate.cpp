#include "indrep/certificate.hpp"

#include "indrep/error.hpp"

namespace indrep {

CertificateReport induction_certificate(const GroupAnalysis& G, const Embedded& N_in_G, const GroupAnalysis& N,
                                        std::optional<std::pair<VirtualModule, VirtualModule>> pair,
                                        const CertificateOptions& opts) {
  CertificateReport rep;
  const FiniteGroup& g = G.group();
  rep.oliver = is_oliver(g);
  if (!rep.oliver.oliver) rep.notes.push_back("G is not an Oliver group");
  const Fusion f = class_fusion(g, N_in_G);
  rep.mono = mono_real(g, N_in_G, f);
  if (!rep.mono.mono) {
    rep.notes.push_back("real induction from N is not injective");
    return rep;
  }
  if (!pair) {
    const SearchResult s = smith_search(N, opts.search);
    if (s.pairs.empty()) {
      rep.notes.push_back("no Smith matched pair on N up to dimension " + std::to_string(opts.search.max_dim));
      return rep;
    }
    pair = s.pairs.front();
  }
  rep.U_N = pair->first;
  rep.V_N = pair->second;
  rep.on_N = smith_matched(N, rep.U_N, rep.V_N);
  if (!rep.on_N.overall(opts.waive_orientability)) rep.notes.push_back("(U, V) is not Smith matched and oriented on N");

  rep.U_G = induce_module(G, N, N_in_G, f, rep.U_N);
  rep.V_G = induce_module(G, N, N_in_G, f, rep.V_N);
  rep.on_G = smith_matched(G, rep.U_G, rep.V_G);
  if (rep.on_G.matched() && !opts.waive_orientability &&
      !(rep.on_G.oriented_U.oriented && rep.on_G.oriented_V.oriented)) {
    rep.doubled = true;
    const VirtualModule U2 = rep.U_G + rep.U_G, V2 = rep.U_G + rep.V_G;
    rep.U_G = U2;
    rep.V_G = V2;
    rep.on_G = smith_matched(G, rep.U_G, rep.V_G);
    rep.notes.push_back("induced pair not oriented; replaced by (U+U, U+V)");
  }
  rep.index = static_cast<long long>(g.order() / N.group().order());
  rep.dimension = dimension(G.real(), rep.U_G);
  const long long base = rep.index * dimension(N.real(), rep.U_N);
  rep.sphere_undoubled = base;
  rep.sphere_doubled = 2 * base;
  if (!rep.on_G.overall(opts.waive_orientability)) rep.notes.push_back("induced pair fails on G");
  rep.pass = rep.oliver.oliver && rep.mono.mono && rep.on_N.overall(opts.waive_orientability) &&
             rep.on_G.overall(opts.waive_orientability);
  return rep;
}

std::vector<NormalMonoEntry> normal_mono_set(const FiniteGroup& G) {
  std::vector<NormalMonoEntry> out;
  for (Subgroup& N : normal_subgroups(G)) {
    if (N.order() == 1 || N.order() == G.order()) continue;
    const Embedded E = as_group(G, N);
    const Fusion f = class_fusion(G, E);
    if (!mono_real(G, E, f).mono) continue;
    Fingerprint fp = fingerprint(E.group);
    bool merged = false;
    for (auto& e : out)
      if (e.fingerprint == fp) {
        ++e.count;
        merged = true;
        break;
      }
    if (!merged) out.push_back(NormalMonoEntry{std::move(N), std::move(fp), 1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const NormalMonoEntry& a, const NormalMonoEntry& b) { return a.subgroup.order() < b.subgroup.order(); });
  return out;
}

}  // namespace indrep
