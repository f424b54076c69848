#include "indrep/module.hpp"

#include <algorithm>
#include <cctype>

#include "indrep/error.hpp"

namespace indrep {

bool VirtualModule::is_zero() const {
  return std::all_of(mult.begin(), mult.end(), [](long long x) { return x == 0; });
}

bool VirtualModule::is_genuine() const {
  return std::all_of(mult.begin(), mult.end(), [](long long x) { return x >= 0; });
}

VirtualModule VirtualModule::positive_part() const {
  VirtualModule r{mult};
  for (auto& x : r.mult) x = std::max(x, 0LL);
  return r;
}

VirtualModule VirtualModule::negative_part() const {
  VirtualModule r{mult};
  for (auto& x : r.mult) x = std::max(-x, 0LL);
  return r;
}

VirtualModule operator+(const VirtualModule& a, const VirtualModule& b) {
  if (a.mult.size() != b.mult.size()) throw Error(ErrorCode::GroupMismatch, "modules over different groups");
  VirtualModule r{a.mult};
  for (std::size_t i = 0; i < r.mult.size(); ++i) r.mult[i] += b.mult[i];
  return r;
}

VirtualModule operator-(const VirtualModule& a, const VirtualModule& b) {
  if (a.mult.size() != b.mult.size()) throw Error(ErrorCode::GroupMismatch, "modules over different groups");
  VirtualModule r{a.mult};
  for (std::size_t i = 0; i < r.mult.size(); ++i) r.mult[i] -= b.mult[i];
  return r;
}

VirtualModule zero_module(const RealIrreducibles& R) { return VirtualModule{std::vector<long long>(R.size(), 0)}; }

VirtualModule irreducible_module(const RealIrreducibles& R, std::size_t i, long long mult) {
  VirtualModule m = zero_module(R);
  m.mult.at(i) = mult;
  return m;
}

long long dimension(const RealIrreducibles& R, const VirtualModule& m) {
  long long d = 0;
  for (std::size_t i = 0; i < m.mult.size(); ++i) d += m.mult[i] * R[i].degree();
  return d;
}

Character module_character(const RealIrreducibles& R, const VirtualModule& m) { return R.combine(m.mult); }

VirtualModule parse_module(const RealIrreducibles& R, std::string_view text) {
  VirtualModule m = zero_module(R);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, "module literal at column " + std::to_string(i + 1) + ": " + what);
  };
  skip();
  if (i < text.size() && text[i] == '0') {
    ++i;
    skip();
    if (i == text.size()) return m;
    fail("unexpected text after 0");
  }
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) {
      if (first) fail("empty literal");
      break;
    }
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    long long coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = coeff * 10 + (text[i++] - '0');
      skip();
      if (i >= text.size() || text[i] != '*') fail("expected *");
      ++i;
      skip();
    }
    const std::size_t start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    const std::string label(text.substr(start, i - start));
    auto idx = R.index_of(label);
    if (!idx) fail("unknown irreducible '" + label + "'");
    m.mult[*idx] += sign * coeff;
    first = false;
  }
  return m;
}

RGModule parse_rg_module(const RealIrreducibles& R, std::string_view text) {
  VirtualModule m = parse_module(R, text);
  if (!m.is_genuine()) throw Error(ErrorCode::ParseError, "module has a negative multiplicity");
  return m;
}

std::string format_module(const RealIrreducibles& R, const VirtualModule& m) {
  std::string s;
  for (std::size_t i = 0; i < m.mult.size(); ++i) {
    const long long c = m.mult[i];
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    s += std::to_string(c < 0 ? -c : c) + "*" + R[i].label;
  }
  return s.empty() ? "0" : s;
}

}  // namespace indrep
