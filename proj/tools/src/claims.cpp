#include "indrep_app/claims.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "indrep/error.hpp"
#include "indrep/smith.hpp"
#include "indrep/subgroup.hpp"
#include "indrep_app/corpus.hpp"

namespace indrep::app {

namespace {

Sl25Fixture make_fixture() {
  const Cyclotomic s = quadratic_gauss_sum(5);
  const mpq_class half(1, 2);
  const Cyclotomic gp = (Cyclotomic(1) + s) * half, gm = (Cyclotomic(1) - s) * half;
  const Cyclotomic m1 = Cyclotomic(-1), one = Cyclotomic(1);
  Sl25Fixture f;
  f.class_names = {"1", "z", "c", "d", "zc", "zd", "a", "b", "b^2"};
  f.row_names = {"V_{3,1}", "V_{3,2}", "V_{4,1}", "V_{4,2}", "V_{4,3}", "V_5", "V_8", "V_{12}"};
  f.values = {
      {3, 3, gp, gm, gp, gm, -1, 0, 0},
      {3, 3, gm, gp, gm, gp, -1, 0, 0},
      {4, 4, -1, -1, 1, 1, 0, -1, -1},
      {4, -4, m1 + s, m1 - s, one - s, one + s, 0, 2, -2},
      {4, -4, m1 - s, m1 + s, one + s, one - s, 0, 2, -2},
      {5, 5, 0, 0, 0, 0, 1, -1, -1},
      {8, -8, -2, -2, 2, 2, 0, -2, 2},
      {12, -12, 2, 2, -2, -2, 0, 0, 0},
  };
  f.subgroup_names = {"C1", "C2", "C3", "C4", "C5", "C6", "C10", "Q8", "Q12", "Q20", "SL(2,3)", "SL(2,5)"};
  f.subgroup_orders = {1, 2, 3, 4, 5, 6, 10, 8, 12, 20, 24, 120};
  f.fixed_row_names = {"V_{3,1}", "V_{4,1}", "V_{4,2}", "V_5", "V_8", "V_{12}"};
  f.fixed = {
      {3, 3, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0}, {4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {4, 4, 2, 2, 0, 2, 0, 1, 1, 0, 1, 0}, {5, 5, 1, 3, 1, 1, 1, 2, 1, 1, 0, 0},
      {8, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {12, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 0},
  };
  f.U = {{2, "V_{3,1}"}, {1, "V_{4,2}"}, {2, "V_{4,3}"}, {2, "V_5"}, {1, "V_8"}, {1, "V_{12}"}};
  f.V = {{2, "V_{3,2}"}, {1, "V_{4,1}"}, {2, "V_{4,3}"}, {2, "V_5"}, {1, "V_8"}, {1, "V_{12}"}};
  return f;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string row_string(const std::vector<long long>& r) {
  std::vector<std::string> parts;
  for (auto v : r) parts.push_back(std::to_string(v));
  return join(parts, " ");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::size_t> degree_indices(const GroupAnalysis& A, long long deg) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.real().size(); ++i)
    if (A.real()[i].degree() == deg) out.push_back(i);
  return out;
}

long long row_degree(const std::string& name) {
  const auto& f = sl25_fixture();
  for (std::size_t r = 0; r < f.row_names.size(); ++r)
    if (f.row_names[r] == name) return f.values[r][0].rational().get_num().get_si();
  return 0;
}

std::string failed_conditions(const SmithReport& rep) {
  std::vector<std::string> parts;
  for (const auto& c : rep.conditions)
    if (!c.pass) parts.push_back("(" + std::to_string(c.number) + ") " + c.name + (c.witness.empty() ? "" : " at " + c.witness));
  if (!rep.oriented_U.oriented) parts.push_back("U not P-oriented");
  if (!rep.oriented_V.oriented) parts.push_back("V not P-oriented");
  return parts.empty() ? "none" : join(parts, "; ");
}

Permutation pad(const Permutation& p, std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i) im[i] = p[i];
  return Permutation(std::move(im));
}

/// Nearest completion of the value-matched labels: every unmatched name goes
/// to the unique unclaimed real irreducible of its degree.
std::optional<LabelMap> nearest_labels(const GroupAnalysis& A, const LabelMap& exact,
                                       const std::vector<std::string>& unmatched) {
  LabelMap out = exact;
  for (const auto& name : unmatched) {
    std::vector<std::size_t> free;
    for (std::size_t i : degree_indices(A, row_degree(name))) {
      bool claimed = false;
      for (const auto& [n, j] : out) claimed = claimed || j == i;
      if (!claimed) free.push_back(i);
    }
    if (free.size() != 1) return std::nullopt;
    out[name] = free[0];
  }
  return out;
}

const LinearGroups& sl25_linear() {
  static const LinearGroups L = linear_groups(5);
  return L;
}

}  // namespace

const Sl25Fixture& sl25_fixture() {
  static const Sl25Fixture f = make_fixture();
  return f;
}

std::vector<std::uint32_t> sl25_columns(const FiniteGroup& N) {
  const LinearGroups& L = sl25_linear();
  const auto& n = L.named_sl;
  const Elem z = n.at("z"), c = n.at("c"), d = n.at("d"), b = n.at("b");
  const std::vector<Elem> elems = {n.at("1"), z, c, d, L.sl.mul(z, c), L.sl.mul(z, d), n.at("a"), b, L.sl.mul(b, b)};
  std::vector<std::uint32_t> out;
  for (Elem e : elems) out.push_back(N.class_of(N.index_of(pad(L.sl.element(e), N.degree()))));
  return out;
}

LabelMap match_rows(const GroupAnalysis& A, const std::vector<std::uint32_t>& columns,
                    std::vector<std::string>* unmatched) {
  const auto& f = sl25_fixture();
  LabelMap out;
  for (std::size_t r = 0; r < f.row_names.size(); ++r) {
    bool found = false;
    for (std::size_t i = 0; i < A.real().size() && !found; ++i) {
      bool eq = true;
      for (std::size_t k = 0; k < columns.size() && eq; ++k) eq = A.real()[i].chi.values[columns[k]] == f.values[r][k];
      if (eq) {
        out[f.row_names[r]] = i;
        found = true;
      }
    }
    if (!found && unmatched) unmatched->push_back(f.row_names[r]);
  }
  return out;
}

std::optional<VirtualModule> build_module(const GroupAnalysis& A, const Sl25Fixture::Terms& terms,
                                          const LabelMap& labels, std::string* missing) {
  VirtualModule m = zero_module(A.real());
  for (const auto& [k, name] : terms) {
    auto it = labels.find(name);
    if (it == labels.end()) {
      if (missing) *missing = name;
      return std::nullopt;
    }
    m.mult[it->second] += k;
  }
  return m;
}

std::vector<LabelMap> repaired_labels(const GroupAnalysis& A, const LabelMap& exact) {
  const std::vector<std::string> names = {"V_{4,1}", "V_{4,2}", "V_{4,3}"};
  auto idx = degree_indices(A, 4);
  std::vector<LabelMap> out;
  if (idx.size() != names.size()) return out;
  const auto& f = sl25_fixture();
  do {
    LabelMap m = exact;
    for (std::size_t k = 0; k < names.size(); ++k) m[names[k]] = idx[k];
    auto U = build_module(A, f.U, m), V = build_module(A, f.V, m);
    if (!U || !V) continue;
    if (smith_matched(A, *U, *V).overall(false)) out.push_back(std::move(m));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::string describe_labels(const GroupAnalysis& A, const LabelMap& labels, const std::vector<std::string>& names) {
  std::vector<std::string> parts;
  for (const auto& n : names) {
    auto it = labels.find(n);
    parts.push_back(n + "->" + (it == labels.end() ? std::string("?") : A.real()[it->second].label));
  }
  return join(parts, ", ");
}

const Sl25Context& sl25_context() {
  static const Sl25Context ctx = [] {
    Sl25Context c{sl25_linear(), nullptr, {}, {}, {}, {}};
    c.analysis = std::make_shared<const GroupAnalysis>(std::make_shared<const FiniteGroup>(c.linear.sl));
    c.column_class = sl25_columns(c.analysis->group());
    const auto& L = c.analysis->lattice();
    for (std::size_t order : sl25_fixture().subgroup_orders) {
      auto found = static_cast<std::uint32_t>(L.classes.size());
      for (std::uint32_t k = 0; k < L.classes.size(); ++k)
        if (L.classes[k].order == order) found = k;
      c.subgroup_class.push_back(found);
    }
    c.exact = match_rows(*c.analysis, c.column_class, &c.unmatched);
    return c;
  }();
  return ctx;
}

MonoSweepRow sl2gl2_row(std::uint64_t q) {
  const LinearGroups L = linear_groups(q);
  std::vector<Elem> gens;
  for (const auto& g : L.sl.generators()) gens.push_back(L.gl.index_of(g));
  const Embedded E = as_group(L.gl, generate(L.gl, gens));
  const Fusion f = class_fusion(L.gl, E);
  const MonoVerdict c = mono_complex(L.gl, E, f), r = mono_real(L.gl, E, f);
  MonoSweepRow row{q, c.mono, r.mono, std::nullopt, std::nullopt};
  if (c.witness) row.complex_witness = L.gl.element(*c.witness).to_string();
  if (r.witness) row.real_witness = L.gl.element(*r.witness).to_string();
  return row;
}

std::vector<Claim> claims_mono_sweep() {
  const std::set<std::uint64_t> complex_q = {2, 4, 8}, real_q = {2, 3, 4, 7, 8, 11};
  std::vector<Claim> out;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const MonoSweepRow row = sl2gl2_row(q);
    const bool ec = complex_q.count(q) > 0, er = real_q.count(q) > 0;
    Claim c;
    c.anchor = "sl2gl2-mono";
    c.pass = row.mono_complex == ec && row.mono_real == er;
    c.detail = "q=" + std::to_string(q) + " mono_complex=" + yes_no(row.mono_complex) + " (expected " + yes_no(ec) +
               ") mono_real=" + yes_no(row.mono_real) + " (expected " + yes_no(er) + ")";
    if (row.mono_complex != ec && row.complex_witness) c.notes.push_back("complex witness " + *row.complex_witness);
    if (row.mono_real != er && row.real_witness) c.notes.push_back("real witness " + *row.real_witness);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Claim> claims_sl25_tables() {
  const auto& f = sl25_fixture();
  const auto& ctx = sl25_context();
  const GroupAnalysis& A = *ctx.analysis;
  const auto& cls = A.group().classes();
  std::vector<Claim> out;

  Claim rows;
  rows.anchor = "sl25-real-table";
  std::set<std::size_t> targets;
  for (const auto& [n, i] : ctx.exact) targets.insert(i);
  std::size_t nontrivial = 0;
  for (const auto& W : A.real().list()) nontrivial += W.degree() > 1 || !(W.chi == trivial_character(A.real().class_info()));
  rows.pass = ctx.unmatched.empty() && targets.size() == f.row_names.size() && nontrivial == f.row_names.size();
  rows.detail = std::to_string(ctx.exact.size()) + "/" + std::to_string(f.row_names.size()) +
                " rows equal a real irreducible exactly; " + std::to_string(nontrivial) + " nontrivial real irreducibles";
  for (const auto& [n, i] : ctx.exact) rows.notes.push_back(n + " = " + A.real()[i].label);
  for (const auto& name : ctx.unmatched) {
    const auto r = static_cast<std::size_t>(std::find(f.row_names.begin(), f.row_names.end(), name) - f.row_names.begin());
    Cyclotomic total;
    for (std::size_t k = 0; k < ctx.column_class.size(); ++k)
      total += f.values[r][k] * mpq_class(static_cast<unsigned long>(cls.sizes[ctx.column_class[k]]));
    std::string note = name + " matches no real irreducible; sum over G of its values is " + total.to_string() +
                       ", not divisible by " + std::to_string(A.group().order()) + ", so it is not a character";
    rows.notes.push_back(note);
  }
  out.push_back(std::move(rows));

  Claim golden;
  golden.anchor = "sl25-golden-ratio";
  const Cyclotomic gp = (Cyclotomic(1) + quadratic_gauss_sum(5)) * mpq_class(1, 2);
  const Cyclotomic gm = (Cyclotomic(1) - quadratic_gauss_sum(5)) * mpq_class(1, 2);
  auto v31 = ctx.exact.find("V_{3,1}"), v32 = ctx.exact.find("V_{3,2}");
  golden.pass = v31 != ctx.exact.end() && v32 != ctx.exact.end() &&
                A.real()[v31->second].chi.values[ctx.column_class[2]] == gp &&
                A.real()[v32->second].chi.values[ctx.column_class[2]] == gm && v31->second != v32->second;
  golden.detail = "values (1+sqrt5)/2 and (1-sqrt5)/2 at class c compared exactly: " + yes_no(golden.pass);
  out.push_back(std::move(golden));

  Claim sub;
  sub.anchor = "sl25-subgroup-classes";
  const auto& L = A.lattice();
  std::set<std::uint32_t> distinct(ctx.subgroup_class.begin(), ctx.subgroup_class.end());
  sub.pass = L.classes.size() == f.subgroup_orders.size() && distinct.size() == f.subgroup_orders.size() &&
             !distinct.count(static_cast<std::uint32_t>(L.classes.size()));
  sub.detail = std::to_string(L.classes.size()) + " subgroup classes, one per listed order";
  out.push_back(std::move(sub));

  Claim fixed;
  fixed.anchor = "sl25-fixed-dims";
  const auto& T = A.fixed_dim_table();
  auto our_row = [&](std::size_t i) {
    std::vector<long long> r;
    for (auto k : ctx.subgroup_class) r.push_back(k < T[i].size() ? T[i][k] : -1);
    return r;
  };
  std::size_t equal = 0;
  for (std::size_t r = 0; r < f.fixed_row_names.size(); ++r) {
    const std::string& name = f.fixed_row_names[r];
    auto it = ctx.exact.find(name);
    std::vector<std::string> same;
    for (std::size_t i = 0; i < A.real().size(); ++i)
      if (our_row(i) == f.fixed[r]) same.push_back(A.real()[i].label);
    if (it != ctx.exact.end() && our_row(it->second) == f.fixed[r]) {
      ++equal;
      continue;
    }
    std::string note = name + " listed row " + row_string(f.fixed[r]);
    if (it == ctx.exact.end())
      note += "; no value-matched irreducible";
    else
      note += "; value-matched " + A.real()[it->second].label + " has " + row_string(our_row(it->second));
    note += "; irreducibles with the listed row: " + (same.empty() ? std::string("none") : join(same, ","));
    fixed.notes.push_back(note);
  }
  fixed.pass = equal == f.fixed_row_names.size();
  fixed.detail = std::to_string(equal) + "/" + std::to_string(f.fixed_row_names.size()) +
                 " rows equal under value-matched labels, 12 columns";
  out.push_back(std::move(fixed));
  return out;
}

std::vector<Claim> claims_sl25_pair(const ClaimOptions& opts) {
  const auto& f = sl25_fixture();
  const auto& ctx = sl25_context();
  const GroupAnalysis& A = *ctx.analysis;
  const std::vector<std::string> deg4 = {"V_{4,1}", "V_{4,2}", "V_{4,3}"};
  std::vector<Claim> out;

  std::string missing;
  auto U = build_module(A, f.U, ctx.exact, &missing);
  auto V = build_module(A, f.V, ctx.exact, &missing);
  const auto repaired = repaired_labels(A, ctx.exact);

  Claim pair;
  pair.anchor = "sl25-pair-smith";
  if (U && V) {
    const SmithReport rep = smith_matched(A, *U, *V);
    pair.pass = rep.overall(opts.waive_orientability) && rep.dim_U == 48 && rep.dim_V == 48;
    pair.detail = "U=" + format_module(A.real(), *U) + " V=" + format_module(A.real(), *V) +
                  " dim " + std::to_string(rep.dim_U) + "; failed: " + failed_conditions(rep);
  } else {
    pair.pass = false;
    pair.detail = "pair not defined: " + missing + " matches no real irreducible";
  }
  if (auto near = nearest_labels(A, ctx.exact, ctx.unmatched); near && !(U && V)) {
    auto nU = build_module(A, f.U, *near), nV = build_module(A, f.V, *near);
    const SmithReport rep = smith_matched(A, *nU, *nV);
    pair.notes.push_back("nearest completion " + describe_labels(A, *near, deg4) + ": dim " + std::to_string(rep.dim_U) +
                         ", failed: " + failed_conditions(rep));
  }
  for (const auto& m : repaired) {
    auto rU = build_module(A, f.U, m), rV = build_module(A, f.V, m);
    pair.notes.push_back("relabelled " + describe_labels(A, m, deg4) + ": Smith matched and oriented, dim " +
                         std::to_string(dimension(A.real(), *rU)) + ", U=" + format_module(A.real(), *rU) +
                         " V=" + format_module(A.real(), *rV));
  }
  if (repaired.empty()) pair.notes.push_back("no relabelling of the degree-4 rows makes the pair Smith matched");
  out.push_back(std::move(pair));

  SearchOptions so;
  so.max_dim = 64;
  so.node_cap = opts.search_cap;
  so.waive_orientability = opts.waive_orientability;
  const SearchResult sr = smith_search(A, so);

  Claim minimum;
  minimum.anchor = "sl25-search-minimum";
  minimum.pass = sr.min_dim && *sr.min_dim == 48;
  minimum.detail = "minimal dimension " + (sr.min_dim ? std::to_string(*sr.min_dim) : std::string("none")) + " with " +
                   std::to_string(sr.pairs.size()) + " pair(s), lattice rank " + std::to_string(sr.lattice_rank);
  for (const auto& [a, b] : sr.pairs)
    minimum.notes.push_back(format_module(A.real(), a) + " | " + format_module(A.real(), b));
  out.push_back(std::move(minimum));

  auto contains = [&](const VirtualModule& a, const VirtualModule& b) {
    return std::any_of(sr.pairs.begin(), sr.pairs.end(), [&](const auto& p) {
      return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
  };
  Claim includes;
  includes.anchor = "sl25-search-includes-pair";
  if (U && V) {
    includes.pass = contains(*U, *V);
    includes.detail = "listed pair among the minimal pairs: " + yes_no(includes.pass);
  } else {
    includes.pass = false;
    includes.detail = "listed pair not defined (" + missing + ")";
  }
  for (const auto& m : repaired) {
    auto rU = build_module(A, f.U, m), rV = build_module(A, f.V, m);
    includes.notes.push_back("relabelled " + describe_labels(A, m, deg4) + " pair among the minimal pairs: " +
                             yes_no(contains(*rU, *rV)));
  }
  out.push_back(std::move(includes));
  return out;
}

std::vector<Claim> claims_po_ranks() {
  const LoadedGroup G = load_group("C6xA4xD30");
  AnalysisOptions ao;
  ao.build_lattice = false;
  const GroupAnalysis A(G.group, *G.table, ao);
  const PoRanks r = po_lattice_ranks(A);
  auto claim = [](std::string anchor, bool pass, std::string detail) {
    return Claim{std::move(anchor), pass, std::move(detail), {}};
  };
  return {
      claim("po-prim", r.prim == 107, "prim(C6xA4xD30) = " + std::to_string(r.prim) + " (expected 107)"),
      claim("po-quotient", r.beta_nil == 20,
            "beta'(G/G^nil) = " + std::to_string(r.beta_nil) + " (expected 20)"),
      claim("po-bound", r.bound == 87, "prim - beta' = " + std::to_string(r.bound) + " (expected 87)"),
      claim("po-reduced-large-rank", static_cast<long long>(r.rank_reduced_L) >= 87,
            "rank of reduced PO with large vanishing = " + std::to_string(r.rank_reduced_L) + " (expected >= 87)"),
  };
}

std::vector<Claim> claims_normal_mono() {
  std::vector<Claim> out;
  auto orders_of = [](const std::vector<NormalMonoEntry>& es) {
    std::vector<std::size_t> o;
    for (const auto& e : es) o.push_back(e.subgroup.order());
    std::sort(o.begin(), o.end());
    return o;
  };
  auto orders_string = [](const std::vector<std::size_t>& o) {
    std::vector<std::string> p;
    for (auto v : o) p.push_back(std::to_string(v));
    return "{" + join(p, ",") + "}";
  };
  for (const auto& [name, expected] : std::vector<std::pair<std::string, std::vector<std::size_t>>>{
           {"C3xS4", {3, 12, 24}}, {"S3xA4", {3, 6, 12}}, {"G3", {}}}) {
    const auto es = normal_mono_set(*load_group(name).group);
    const auto o = orders_of(es);
    out.push_back(Claim{"normal-mono-" + name, o == expected,
                        "orders " + orders_string(o) + " (expected " + orders_string(expected) + ")", {}});
  }
  {
    const auto g3 = fingerprint(*load_group("G3").group);
    const auto es = normal_mono_set(*load_group("G4").group);
    const bool pass = es.size() == 1 && es[0].fingerprint == g3;
    const std::size_t n = es.empty() ? 0 : es[0].count;
    out.push_back(Claim{"normal-mono-G4", pass,
                        "orders " + orders_string(orders_of(es)) + "; one fingerprint class equal to G3: " +
                            yes_no(pass) + " (" + std::to_string(n) + " normal subgroups share it)",
                        {}});
  }
  {
    const LoadedGroup aut = load_group("AutA6");
    const auto es = normal_mono_set(*aut.group);
    std::size_t n720 = 0, total720 = 0;
    bool ok = false;
    for (const auto& e : es) {
      if (e.subgroup.order() != 720) continue;
      ++n720;
      total720 += e.count;
      const Embedded E = as_group(*aut.group, e.subgroup);
      ok = !is_solvable(E.group) && prim(E.group) == 0;
    }
    std::size_t normals720 = 0;
    for (const auto& N : normal_subgroups(*aut.group)) normals720 += N.order() == 720;
    const bool pass = n720 == 1 && total720 == 1 && ok;
    out.push_back(Claim{"normal-mono-AutA6", pass,
                        std::to_string(total720) + " of " + std::to_string(normals720) +
                            " normal subgroups of order 720 pass; nonsolvable with prim 0: " + yes_no(ok),
                        {}});
  }
  return out;
}

std::vector<Claim> claims_certificate(const ClaimOptions& opts) {
  const auto& f = sl25_fixture();
  const LoadedGroup P = load_group("SL25xC2");
  const AnalysisPtr GA = analyze(P);
  const FiniteGroup& G = *P.group;
  std::vector<Elem> gens;
  for (Elem g : G.generator_elems()) {
    const auto im = G.images(g);
    bool inside = true;
    for (std::size_t i = 24; i < im.size(); ++i) inside = inside && im[i] == i;
    if (inside) gens.push_back(g);
  }
  const Embedded E = as_group(G, generate(G, gens));
  const GroupAnalysis NA(std::make_shared<const FiniteGroup>(E.group));
  const auto cols = sl25_columns(E.group);
  std::vector<std::string> unmatched;
  const LabelMap exact = match_rows(NA, cols, &unmatched);

  CertificateOptions co;
  co.waive_orientability = opts.waive_orientability;
  co.search.node_cap = opts.search_cap;

  Claim c;
  c.anchor = "certificate-sl25xc2";
  std::string missing;
  auto U = build_module(NA, f.U, exact, &missing), V = build_module(NA, f.V, exact, &missing);
  if (U && V) {
    const CertificateReport rep = induction_certificate(*GA, E, NA, std::make_pair(*U, *V), co);
    c.pass = rep.pass && rep.dimension == 96;
    c.detail = "certificate " + std::string(rep.pass ? "passes" : "fails") + ", induced dimension " +
               std::to_string(rep.dimension) + " (expected 96)";
    c.notes = rep.notes;
  } else {
    c.pass = false;
    c.detail = "listed pair not defined on N = SL(2,5): " + missing + " matches no real irreducible";
  }
  for (const auto& m : repaired_labels(NA, exact)) {
    auto rU = build_module(NA, f.U, m), rV = build_module(NA, f.V, m);
    const CertificateReport rep = induction_certificate(*GA, E, NA, std::make_pair(*rU, *rV), co);
    c.notes.push_back("relabelled " + describe_labels(NA, m, {"V_{4,1}", "V_{4,2}", "V_{4,3}"}) + ": certificate " +
                      (rep.pass ? "passes" : "fails") + ", induced dimension " + std::to_string(rep.dimension) +
                      (rep.doubled ? " (doubled)" : ""));
  }
  return {c};
}

}  // namespace indrep::app
