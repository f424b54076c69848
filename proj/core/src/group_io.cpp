#include "indrep/group_io.hpp"

#include <fstream>
#include <sstream>

#include "indrep/error.hpp"

namespace indrep {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  bool have_degree = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!have_degree) {
      std::istringstream in{std::string(line)};
      std::string kw;
      long long n = -1;
      in >> kw >> n;
      std::string rest;
      if (kw != "degree" || n < 1 || n > 65535 || (in >> rest))
        throw Error(ErrorCode::ParseError, where + "expected `degree N` with 1 <= N <= 65535");
      spec.degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      spec.generators.push_back(Permutation::parse(spec.degree, line));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, where + e.what());
    }
  }
  if (!have_degree) throw Error(ErrorCode::ParseError, "missing `degree N` line");
  return spec;
}

GroupSpec read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_group_spec(ss.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

std::string format_group_spec(const GroupSpec& spec, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + "\n";
  out += "degree " + std::to_string(spec.degree) + "\n";
  for (const auto& g : spec.generators) out += g.to_string() + "\n";
  return out;
}

FiniteGroup build_group(const GroupSpec& spec, const GroupOptions& opts) {
  return FiniteGroup::build(spec.degree, spec.generators, opts);
}

}  // namespace indrep
