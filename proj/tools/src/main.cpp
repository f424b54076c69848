#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "indrep_app/commands.hpp"

int main(int argc, char** argv) {
  using namespace indrep::app;
  CLI::App app{"Induction of representations, character tables and Smith matched modules for finite groups"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::string format = "text";
  app.add_option("--max-order", g.max_order, "Largest group order enumerated")->capture_default_str();
  app.add_option("--lattice-cap", g.lattice_cap, "Largest order for subgroup lattices")->capture_default_str();
  app.add_option("--search-cap", g.search_cap, "Node budget for module searches")->capture_default_str();
  app.add_flag("--waive-orientability", g.waive_orientability, "Do not require P-orientability");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();

  std::string group;
  auto* info = app.add_subcommand("info", "Group invariants, Oliver verdict and lattice summary");
  info->add_option("group", group, "Corpus name, sl2:q, gl2:q, C<n> or group file")->required();

  bool real = false;
  auto* chartab = app.add_subcommand("chartab", "Complex or real character table");
  chartab->add_option("group", group)->required();
  chartab->add_flag("--real", real, "Real irreducible characters");

  std::vector<std::string> sub;
  bool rank = false;
  auto* induction = app.add_subcommand("induction", "Class criterion and induction ranks for H <= G");
  induction->add_option("group", group)->required();
  induction->add_option("--sub", sub, "Generators of H in cycle notation")->required();
  induction->add_flag("--rank", rank, "Also compute exact induction matrix ranks");

  auto* smith = app.add_subcommand("smith", "Smith matched modules");
  smith->require_subcommand(1);
  std::string U, V;
  auto* verify = smith->add_subcommand("verify", "Check the six conditions and orientability");
  verify->add_option("group", group)->required();
  verify->add_option("--U", U, "Module literal, e.g. 2*V3a+V5a")->required();
  verify->add_option("--V", V, "Module literal")->required();
  long long max_dim = 64;
  auto* search = smith->add_subcommand("search", "Least dimension of a Smith matched pair");
  search->add_option("group", group)->required();
  search->add_option("--max-dim", max_dim)->capture_default_str();

  std::vector<std::uint64_t> qs;
  auto* sweep = app.add_subcommand("sl2gl2", "Induction criteria for SL(2,q) in GL(2,q)");
  sweep->add_option("--q", qs, "Field sizes")->required();

  CertificateArgs cert;
  std::size_t normal_order = 0;
  std::string cu, cv;
  auto* certificate = app.add_subcommand("certificate", "Induction certificate for N normal in G");
  certificate->add_option("group", cert.group)->required();
  auto* sub_opt = certificate->add_option("--sub", cert.sub_gens, "Generators of N");
  certificate->add_option("--normal-order", normal_order, "Pick a normal subgroup of this order")->excludes(sub_opt);
  certificate->add_option("--U", cu, "Module on N");
  certificate->add_option("--V", cv, "Module on N");

  auto* reproduce = app.add_subcommand("reproduce-paper", "Check every published claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : InputError;
  }
  g.format = format == "tsv" ? Format::Tsv : Format::Text;

  return run_guarded(
      [&]() -> int {
        if (*info) return cmd_info(group, g, std::cout);
        if (*chartab) return cmd_chartab(group, real, g, std::cout);
        if (*induction) return cmd_induction(group, sub, rank, g, std::cout);
        if (*verify) return cmd_smith_verify(group, U, V, g, std::cout);
        if (*search) return cmd_smith_search(group, max_dim, g, std::cout);
        if (*sweep) return cmd_sl2gl2(qs, g, std::cout);
        if (*certificate) {
          if (normal_order) cert.normal_order = normal_order;
          if (!cu.empty()) cert.U = cu;
          if (!cv.empty()) cert.V = cv;
          return cmd_certificate(cert, g, std::cout);
        }
        if (*reproduce) return cmd_reproduce_paper(g, std::cout);
        return InputError;
      },
      std::cerr);
}
