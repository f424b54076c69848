#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace indrep::app {

enum class Format { Text, Tsv };

struct GlobalOptions {
  std::size_t max_order = 1'000'000;
  std::size_t lattice_cap = 2000;
  std::size_t search_cap = 200'000'000;
  bool waive_orientability = false;
  Format format = Format::Text;
};

enum ExitCode : int { Ok = 0, VerificationFailed = 1, InputError = 2, BudgetExceeded = 3 };

int cmd_info(const std::string& group, const GlobalOptions& g, std::ostream& out);
int cmd_chartab(const std::string& group, bool real, const GlobalOptions& g, std::ostream& out);
int cmd_induction(const std::string& group, const std::vector<std::string>& sub_gens, bool rank,
                  const GlobalOptions& g, std::ostream& out);
int cmd_smith_verify(const std::string& group, const std::string& U, const std::string& V, const GlobalOptions& g,
                     std::ostream& out);
int cmd_smith_search(const std::string& group, long long max_dim, const GlobalOptions& g, std::ostream& out);
int cmd_sl2gl2(const std::vector<std::uint64_t>& qs, const GlobalOptions& g, std::ostream& out);

struct CertificateArgs {
  std::string group;
  std::vector<std::string> sub_gens;
  std::optional<std::size_t> normal_order;
  std::optional<std::string> U, V;
};
int cmd_certificate(const CertificateArgs& args, const GlobalOptions& g, std::ostream& out);
int cmd_reproduce_paper(const GlobalOptions& g, std::ostream& out);

/// Runs a command, mapping library errors to exit codes with a message on `err`.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace indrep::app
