#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indrep/real_characters.hpp"

namespace indrep {

/// Element of RO(G) as coordinates over the canonical real irreducibles.
/// An RGModule is the special case with non-negative coordinates.
struct VirtualModule {
  std::vector<long long> mult;

  bool is_zero() const;
  bool is_genuine() const;
  VirtualModule positive_part() const;
  VirtualModule negative_part() const;
  friend VirtualModule operator+(const VirtualModule& a, const VirtualModule& b);
  friend VirtualModule operator-(const VirtualModule& a, const VirtualModule& b);
  friend bool operator==(const VirtualModule&, const VirtualModule&) = default;
  friend auto operator<=>(const VirtualModule&, const VirtualModule&) = default;
};

using RGModule = VirtualModule;

VirtualModule zero_module(const RealIrreducibles& R);
VirtualModule irreducible_module(const RealIrreducibles& R, std::size_t i, long long mult = 1);

long long dimension(const RealIrreducibles& R, const VirtualModule& m);
Character module_character(const RealIrreducibles& R, const VirtualModule& m);

/// Literal such as `2*V3a+1*V4b` or `V5a-V4a`; `0` is the zero module.
VirtualModule parse_module(const RealIrreducibles& R, std::string_view text);
/// Throws ParseError if some coordinate is negative.
RGModule parse_rg_module(const RealIrreducibles& R, std::string_view text);
std::string format_module(const RealIrreducibles& R, const VirtualModule& m);

}  // namespace indrep
