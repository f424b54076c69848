#include "indrep_app/corpus.hpp"

#include <filesystem>
#include <regex>

#include "indrep/error.hpp"
#include "indrep/group_io.hpp"
#include "indrep/linear_groups.hpp"
#include "indrep/subgroup.hpp"

namespace indrep::app {

namespace {

std::string cyclic_spec(std::size_t n) {
  std::string s = "degree " + std::to_string(n) + "\n";
  if (n > 1) {
    s += "(";
    for (std::size_t i = 1; i <= n; ++i) s += std::to_string(i) + (i < n ? " " : ")\n");
  }
  return s;
}

std::string dihedral_spec(std::size_t n) {
  std::string s = cyclic_spec(n);
  for (std::size_t k = 1; 2 * k < n; ++k) s += "(" + std::to_string(k + 1) + " " + std::to_string(n - k + 1) + ")";
  return s + "\n";
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  auto add_spec = [&](std::string name, std::string desc, std::size_t order, std::size_t ncl, std::string spec) {
    c.push_back(CorpusEntry{std::move(name), std::move(desc), order, ncl, std::move(spec), {}, {}});
  };
  auto add_product = [&](std::string name, std::string desc, std::size_t order, std::size_t ncl,
                         std::vector<std::string> factors) {
    c.push_back(CorpusEntry{std::move(name), std::move(desc), order, ncl, {}, std::move(factors), {}});
  };
  add_spec("C1", "trivial group", 1, 1, "degree 1\n");
  add_spec("C2", "cyclic group of order 2", 2, 2, cyclic_spec(2));
  add_spec("C3", "cyclic group of order 3", 3, 3, cyclic_spec(3));
  add_spec("C6", "cyclic group of order 6", 6, 6, cyclic_spec(6));
  add_spec("C30", "cyclic group of order 30", 30, 30, cyclic_spec(30));
  add_spec("S3", "symmetric group on 3 points", 6, 3, "degree 3\n(1 2 3)\n(1 2)\n");
  add_spec("A4", "alternating group on 4 points", 12, 4, "degree 4\n(1 2 3)\n(1 2)(3 4)\n");
  add_spec("S4", "symmetric group on 4 points", 24, 5, "degree 4\n(1 2 3 4)\n(1 2)\n");
  add_spec("A5", "alternating group on 5 points", 60, 5, "degree 5\n(1 2 3 4 5)\n(1 2 3)\n");
  add_spec("D30", "dihedral group of order 30", 30, 9, dihedral_spec(15));
  add_spec("G3", "A4 wr C2, order 288", 288, 14, "degree 8\n(1 2 3)\n(1 2)(3 4)\n(1 5)(2 6)(3 7)(4 8)\n");
  add_spec("G4", "A4^2 : C2^2, order 576", 576, 16,
           "degree 8\n(1 2 3)\n(1 2)(3 4)\n(1 5)(2 6)(3 7)(4 8)\n(1 2)(5 6)\n");
  add_spec("AutA6", "PGammaL(2,9) on the projective line, order 1440", 1440, 13,
           "degree 10\n(1 2 3)(4 5 6)(7 8 9)\n(2 5 7 8 3 9 4 6)\n(1 10)(2 3)(5 8)(6 9)\n(4 7)(5 8)(6 9)\n");
  c.push_back(CorpusEntry{"SL25", "SL(2,5) on the 24 nonzero vectors of F_5^2", 120, 9, {}, {},
                          [](const GroupOptions&) { return sl2(5); }});
  c.push_back(CorpusEntry{"GL25", "GL(2,5) on the 24 nonzero vectors of F_5^2", 480, 24, {}, {},
                          [](const GroupOptions&) { return gl2(5); }});
  add_product("SL25xC2", "SL(2,5) x C2", 240, 18, {"SL25", "C2"});
  add_product("C3xS4", "C3 x S4", 72, 15, {"C3", "S4"});
  add_product("G1", "C3 x S4", 72, 15, {"C3", "S4"});
  add_product("S3xA4", "S3 x A4", 72, 12, {"S3", "A4"});
  add_product("G2", "S3 x A4", 72, 12, {"S3", "A4"});
  add_product("C6xC6", "C6 x C6", 36, 36, {"C6", "C6"});
  add_product("C6xA4xD30", "C6 x A4 x D30", 2160, 216, {"C6", "A4", "D30"});
  return c;
}

void check_fingerprint(const std::string& name, const FiniteGroup& G, std::size_t order, std::size_t ncl) {
  if (G.order() != order || G.nclasses() != ncl)
    throw Error(ErrorCode::GroupMismatch, "corpus entry " + name + " rejected: expected order " + std::to_string(order) +
                                              " with " + std::to_string(ncl) + " classes, got order " +
                                              std::to_string(G.order()) + " with " + std::to_string(G.nclasses()));
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus();
  return c;
}

const CorpusEntry* find_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

LoadedGroup load_entry(const CorpusEntry& e, const GroupOptions& opts) {
  LoadedGroup out;
  out.name = e.name;
  if (!e.factors.empty()) {
    std::optional<FiniteGroup> acc;
    std::optional<CharacterTable> table;
    for (const auto& fname : e.factors) {
      const CorpusEntry* f = find_entry(fname);
      if (!f) throw Error(ErrorCode::ParseError, "unknown factor " + fname);
      LoadedGroup part = load_entry(*f, opts);
      CharacterTable pt = part.table ? *part.table : character_table(*part.group);
      if (!acc) {
        acc = *part.group;
        table = std::move(pt);
      } else {
        FiniteGroup P = direct_product(*acc, *part.group, opts);
        CharacterTable T = product_table(P, *acc, *table, *part.group, pt);
        acc = std::move(P);
        table = std::move(T);
      }
    }
    check_fingerprint(e.name, *acc, e.order, e.nclasses);
    out.group = std::make_shared<const FiniteGroup>(std::move(*acc));
    out.table = std::move(table);
    return out;
  }
  FiniteGroup G = e.make ? e.make(opts) : build_group(parse_group_spec(e.spec), opts);
  check_fingerprint(e.name, G, e.order, e.nclasses);
  out.group = std::make_shared<const FiniteGroup>(std::move(G));
  return out;
}

LoadedGroup load_group(const std::string& arg, const GroupOptions& opts) {
  if (const CorpusEntry* e = find_entry(arg)) return load_entry(*e, opts);
  static const std::regex linear(R"((sl2|gl2):(\d+))"), cyclic(R"(C(\d+))");
  std::smatch m;
  if (std::regex_match(arg, m, linear)) {
    const auto q = std::stoull(m[2].str());
    LoadedGroup out{arg, std::make_shared<const FiniteGroup>(m[1].str() == "sl2" ? sl2(q) : gl2(q)), std::nullopt};
    return out;
  }
  if (std::regex_match(arg, m, cyclic)) {
    const auto n = std::stoull(m[1].str());
    if (n == 0 || n > 65535) throw Error(ErrorCode::ParseError, "cyclic group order out of range");
    return LoadedGroup{arg, std::make_shared<const FiniteGroup>(build_group(parse_group_spec(cyclic_spec(n)), opts)),
                       std::nullopt};
  }
  if (!std::filesystem::exists(arg)) throw Error(ErrorCode::ParseError, "no corpus entry or file named '" + arg + "'");
  return LoadedGroup{std::filesystem::path(arg).stem().string(),
                     std::make_shared<const FiniteGroup>(build_group(read_group_file(arg), opts)), std::nullopt};
}

AnalysisPtr analyze(const LoadedGroup& g, const AnalysisOptions& opts) {
  if (g.table) return std::make_shared<const GroupAnalysis>(g.group, *g.table, opts);
  return std::make_shared<const GroupAnalysis>(g.group, opts);
}

}  // namespace indrep::app
