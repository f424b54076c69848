#include "indrep_app/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "indrep/certificate.hpp"
#include "indrep/error.hpp"
#include "indrep/induction.hpp"
#include "indrep/lattice.hpp"
#include "indrep/search.hpp"
#include "indrep/smith.hpp"
#include "indrep/subgroup.hpp"
#include "indrep_app/corpus.hpp"
#include "indrep_app/claims.hpp"

namespace indrep::app {

namespace {

GroupOptions group_options(const GlobalOptions& g) {
  GroupOptions o;
  o.max_order = g.max_order;
  return o;
}

AnalysisOptions analysis_options(const GlobalOptions& g) {
  AnalysisOptions o;
  o.lattice_cap = g.lattice_cap;
  return o;
}

/// Key/value lines: "key: value" as text, "key\tvalue" as TSV.
class Report {
 public:
  Report(std::ostream& out, Format f) : out_(out), f_(f) {}
  template <class T>
  void field(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    if (f_ == Format::Tsv)
      out_ << key << '\t' << s.str() << '\n';
    else
      out_ << key << ": " << s.str() << '\n';
  }

 private:
  std::ostream& out_;
  Format f_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Subgroup subgroup_from_gens(const FiniteGroup& G, const std::vector<std::string>& gens) {
  std::vector<Elem> elems;
  for (const auto& s : gens) elems.push_back(G.index_of(Permutation::parse(G.degree(), s)));
  return generate(G, elems);
}

std::string elem_string(const FiniteGroup& G, Elem e) { return G.element(e).to_string(); }

void print_table(std::ostream& out, Format f, const ClassInfo& info, const std::vector<Character>& chars,
                 const std::vector<std::string>& labels) {
  if (f == Format::Tsv) {
    out << table_tsv(info, chars, labels);
    return;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {"class"}, ord = {"order"}, size = {"size"};
  for (std::size_t c = 0; c < info.count(); ++c) {
    head.push_back(std::to_string(c));
    ord.push_back(std::to_string(info.orders[c]));
    size.push_back(std::to_string(info.sizes[c]));
  }
  cells.push_back(head);
  cells.push_back(ord);
  cells.push_back(size);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::vector<std::string> row = {labels[i]};
    for (const auto& v : chars[i].values) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& r : cells)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  for (const auto& r : cells) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out << "  ";
      out << std::setw(static_cast<int>(width[k])) << (k ? std::right : std::left) << r[k];
    }
    out << '\n';
  }
}

void print_smith(std::ostream& out, Format f, const GroupAnalysis& A, const SmithReport& rep) {
  Report r(out, f);
  r.field("dim U", rep.dim_U);
  r.field("dim V", rep.dim_V);
  r.field("isomorphic", yes_no(rep.isomorphic));
  for (const auto& c : rep.conditions)
    r.field("condition " + std::to_string(c.number) + " " + c.name,
            std::string(c.pass ? "pass" : "fail") + (c.witness.empty() ? "" : " " + c.witness));
  auto orient = [&](const OrientationResult& o) {
    if (o.oriented) return std::string("yes");
    const auto& [cls, g] = *o.witness;
    return "no, #" + std::to_string(cls) + " reversed by " + elem_string(A.group(), g);
  };
  r.field("P-oriented U", orient(rep.oriented_U));
  r.field("P-oriented V", orient(rep.oriented_V));
}

void print_claim(std::ostream& out, Format f, const Claim& c) {
  if (f == Format::Tsv) {
    out << (c.pass ? "PASS" : "FAIL") << '\t' << c.anchor << '\t' << c.detail << '\n';
    for (const auto& n : c.notes) out << "NOTE\t" << c.anchor << '\t' << n << '\n';
    return;
  }
  out << (c.pass ? "PASS " : "FAIL ") << c.anchor << ": " << c.detail << '\n';
  for (const auto& n : c.notes) out << "     " << n << '\n';
}

}  // namespace

int cmd_info(const std::string& group, const GlobalOptions& g, std::ostream& out) {
  const LoadedGroup L = load_group(group, group_options(g));
  const FiniteGroup& G = *L.group;
  Report r(out, g.format);
  r.field("group", L.name);
  r.field("degree", G.degree());
  r.field("order", G.order());
  r.field("exponent", G.exponent());
  r.field("classes", G.nclasses());
  r.field("real classes", G.nrealclasses());
  r.field("prim", prim(G));
  r.field("solvable", yes_no(is_solvable(G)));
  const OliverVerdict ov = is_oliver(G);
  if (ov.oliver)
    r.field("Oliver", "yes");
  else
    r.field("Oliver", "no (P of order " + std::to_string(ov.P->order()) + ", H of order " +
                          std::to_string(ov.H->order()) + ")");
  if (G.order() > g.lattice_cap) {
    r.field("lattice", "skipped, order exceeds lattice cap " + std::to_string(g.lattice_cap));
    return Ok;
  }
  const AnalysisPtr A = analyze(L, analysis_options(g));
  const auto& lat = A->lattice();
  r.field("subgroup classes", lat.classes.size());
  r.field("prime-power classes", lat.family_P().size());
  r.field("pseudocyclic classes", lat.family_PC().size());
  r.field("large classes", lat.family_L().size());
  const GapResult gap = gap_group_check(*A, 64, g.search_cap);
  if (gap.gap)
    r.field("gap", "yes, witness " + format_module(A->real(), *gap.witness));
  else
    r.field("gap", "no, " + gap.reason);
  return Ok;
}

int cmd_chartab(const std::string& group, bool real, const GlobalOptions& g, std::ostream& out) {
  const LoadedGroup L = load_group(group, group_options(g));
  const CharacterTable T = L.table ? *L.table : character_table(*L.group);
  if (!real) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < T.size(); ++i) labels.push_back("X" + std::to_string(i + 1));
    print_table(out, g.format, T.classes(), T.irreducibles(), labels);
    return Ok;
  }
  const RealIrreducibles R(T);
  std::vector<Character> chars;
  std::vector<std::string> labels;
  for (const auto& W : R.list()) {
    chars.push_back(W.chi);
    labels.push_back(W.label + " " + real_kind_name(W.kind));
  }
  print_table(out, g.format, T.classes(), chars, labels);
  return Ok;
}

int cmd_induction(const std::string& group, const std::vector<std::string>& sub_gens, bool rank,
                  const GlobalOptions& g, std::ostream& out) {
  const LoadedGroup L = load_group(group, group_options(g));
  const FiniteGroup& G = *L.group;
  const Embedded E = as_group(G, subgroup_from_gens(G, sub_gens));
  const Fusion f = class_fusion(G, E);
  const MonoVerdict mc = mono_complex(G, E, f), mr = mono_real(G, E, f);
  Report r(out, g.format);
  r.field("order G", G.order());
  r.field("order H", E.group.order());
  r.field("classes a b", std::to_string(f.a) + " " + std::to_string(f.b));
  r.field("real classes a' b'", std::to_string(f.a_real) + " " + std::to_string(f.b_real));
  r.field("mono complex", std::string(yes_no(mc.mono)) + (mc.witness ? ", witness " + elem_string(G, *mc.witness) : ""));
  r.field("mono real", std::string(yes_no(mr.mono)) + (mr.witness ? ", witness " + elem_string(G, *mr.witness) : ""));
  if (!rank) return Ok;
  const CharacterTable TG = L.table ? *L.table : character_table(G);
  const CharacterTable TH = character_table(E.group);
  const RealIrreducibles RG(TG), RH(TH);
  const InductionMap M = induction_map(G, TG, RG, E, TH, RH);
  r.field("rank complex", std::to_string(M.rank_complex) + " of " + std::to_string(M.complex.size()));
  r.field("rank real", std::to_string(M.rank_real) + " of " + std::to_string(M.real.size()));
  const bool agree = M.complex_full() == mc.mono && M.real_full() == mr.mono;
  r.field("criterion agrees with rank", yes_no(agree));
  return agree ? Ok : VerificationFailed;
}

int cmd_smith_verify(const std::string& group, const std::string& U, const std::string& V, const GlobalOptions& g,
                     std::ostream& out) {
  const AnalysisPtr A = analyze(load_group(group, group_options(g)), analysis_options(g));
  const RGModule mu = parse_rg_module(A->real(), U), mv = parse_rg_module(A->real(), V);
  const SmithReport rep = smith_matched(*A, mu, mv);
  print_smith(out, g.format, *A, rep);
  const bool ok = rep.overall(g.waive_orientability);
  Report(out, g.format).field("verdict", ok ? "Smith matched" : "not Smith matched");
  return ok ? Ok : VerificationFailed;
}

int cmd_smith_search(const std::string& group, long long max_dim, const GlobalOptions& g, std::ostream& out) {
  const AnalysisPtr A = analyze(load_group(group, group_options(g)), analysis_options(g));
  SearchOptions so;
  so.max_dim = max_dim;
  so.node_cap = g.search_cap;
  so.waive_orientability = g.waive_orientability;
  const SearchResult sr = smith_search(*A, so);
  Report r(out, g.format);
  r.field("lattice rank", sr.lattice_rank);
  r.field("minimal dimension", sr.min_dim ? std::to_string(*sr.min_dim) : "none up to " + std::to_string(max_dim));
  r.field("pairs", sr.pairs.size());
  for (const auto& [u, v] : sr.pairs) r.field("pair", format_module(A->real(), u) + " | " + format_module(A->real(), v));
  return sr.min_dim ? Ok : VerificationFailed;
}

int cmd_sl2gl2(const std::vector<std::uint64_t>& qs, const GlobalOptions& g, std::ostream& out) {
  if (g.format == Format::Tsv) out << "q\tmono_complex\tmono_real\tcomplex_witness\treal_witness\n";
  for (auto q : qs) {
    const MonoSweepRow row = sl2gl2_row(q);
    if (g.format == Format::Tsv) {
      out << q << '\t' << yes_no(row.mono_complex) << '\t' << yes_no(row.mono_real) << '\t'
          << row.complex_witness.value_or("-") << '\t' << row.real_witness.value_or("-") << '\n';
    } else {
      out << "q=" << q << " mono_complex=" << yes_no(row.mono_complex) << " mono_real=" << yes_no(row.mono_real);
      if (row.real_witness) out << " real witness " << *row.real_witness;
      else if (row.complex_witness) out << " complex witness " << *row.complex_witness;
      out << '\n';
    }
  }
  return Ok;
}

int cmd_certificate(const CertificateArgs& args, const GlobalOptions& g, std::ostream& out) {
  const LoadedGroup L = load_group(args.group, group_options(g));
  const FiniteGroup& G = *L.group;
  std::optional<Subgroup> N;
  if (!args.sub_gens.empty()) {
    N = subgroup_from_gens(G, args.sub_gens);
  } else if (args.normal_order) {
    for (auto& H : normal_subgroups(G))
      if (H.order() == *args.normal_order) {
        const Embedded E = as_group(G, H);
        const bool mono = mono_real(G, E, class_fusion(G, E)).mono;
        if (!N || mono) N = H;
        if (mono) break;
      }
    if (!N) throw Error(ErrorCode::NotNormal, "no normal subgroup of order " + std::to_string(*args.normal_order));
  } else {
    throw Error(ErrorCode::ParseError, "certificate needs --sub or --normal-order");
  }
  if (!is_normal(G, *N)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  const AnalysisPtr GA = analyze(L, analysis_options(g));
  const Embedded E = as_group(G, *N);
  const GroupAnalysis NA(std::make_shared<const FiniteGroup>(E.group), analysis_options(g));
  std::optional<std::pair<VirtualModule, VirtualModule>> pair;
  if (args.U || args.V) {
    if (!args.U || !args.V) throw Error(ErrorCode::ParseError, "--U and --V go together");
    pair.emplace(parse_rg_module(NA.real(), *args.U), parse_rg_module(NA.real(), *args.V));
  }
  CertificateOptions co;
  co.waive_orientability = g.waive_orientability;
  co.search.node_cap = g.search_cap;
  const CertificateReport rep = induction_certificate(*GA, E, NA, pair, co);
  Report r(out, g.format);
  r.field("order G", G.order());
  r.field("order N", E.group.order());
  r.field("Oliver", yes_no(rep.oliver.oliver));
  r.field("mono real", yes_no(rep.mono.mono));
  r.field("U on N", format_module(NA.real(), rep.U_N));
  r.field("V on N", format_module(NA.real(), rep.V_N));
  r.field("Smith matched on N", yes_no(rep.on_N.overall(g.waive_orientability)));
  r.field("U on G", format_module(GA->real(), rep.U_G));
  r.field("V on G", format_module(GA->real(), rep.V_G));
  r.field("Smith matched on G", yes_no(rep.on_G.matched()));
  r.field("doubled", yes_no(rep.doubled));
  r.field("index", rep.index);
  r.field("induced dimension", rep.dimension);
  r.field("sphere dimension", std::to_string(rep.sphere_undoubled) + " (doubled " + std::to_string(rep.sphere_doubled) + ")");
  for (const auto& n : rep.notes) r.field("note", n);
  r.field("verdict", rep.pass ? "pass" : "fail");
  return rep.pass ? Ok : VerificationFailed;
}

int cmd_reproduce_paper(const GlobalOptions& g, std::ostream& out) {
  ClaimOptions co;
  co.waive_orientability = g.waive_orientability;
  co.search_cap = g.search_cap;
  std::size_t passed = 0, failed = 0;
  auto emit = [&](const std::vector<Claim>& cs) {
    for (const auto& c : cs) {
      print_claim(out, g.format, c);
      (c.pass ? passed : failed)++;
    }
  };
  emit(claims_mono_sweep());
  emit(claims_sl25_tables());
  emit(claims_sl25_pair(co));
  emit(claims_po_ranks());
  emit(claims_normal_mono());
  emit(claims_certificate(co));
  if (g.format == Format::Tsv)
    out << "SUMMARY\t" << passed << " passed\t" << failed << " failed\n";
  else
    out << "claims: " << passed << " passed, " << failed << " failed\n";
  return failed ? VerificationFailed : Ok;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::OrderCapExceeded:
      case ErrorCode::LatticeCapExceeded:
      case ErrorCode::SearchBudgetExceeded:
      case ErrorCode::DegreeTooLarge:
        return BudgetExceeded;
      case ErrorCode::InternalInconsistency:
      case ErrorCode::NoSuitablePrime:
        return VerificationFailed;
      default:
        return InputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }
}

}  // namespace indrep::app
