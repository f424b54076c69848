#include "indrep/real_characters.hpp"

#include <algorithm>
#include <map>

#include "indrep/error.hpp"

namespace indrep {

const char* real_kind_name(RealKind k) {
  switch (k) {
    case RealKind::Real: return "REAL";
    case RealKind::ComplexPair: return "COMPLEX-PAIR";
    case RealKind::Quaternionic: return "QUATERNIONIC";
  }
  return "?";
}

std::string label_suffix(std::size_t i) {
  std::string s;
  ++i;
  while (i > 0) {
    --i;
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  }
  return s;
}

RealIrreducibles::RealIrreducibles(const CharacterTable& table) : classes_(table.class_info()) {
  std::vector<bool> used(table.size(), false);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Character& chi = table[i];
    RealIrreducible ri;
    ri.source = i;
    ri.indicator = frobenius_schur(chi);
    if (ri.indicator == 1) {
      ri.kind = RealKind::Real;
      ri.chi = chi;
    } else if (ri.indicator == -1) {
      ri.kind = RealKind::Quaternionic;
      ri.chi = chi + chi;
    } else {
      ri.kind = RealKind::ComplexPair;
      const long j = table.find(chi.conj());
      if (j < 0 || used[static_cast<std::size_t>(j)])
        throw Error(ErrorCode::InternalInconsistency, "complex character without a conjugate row");
      used[static_cast<std::size_t>(j)] = true;
      ri.partner = static_cast<std::size_t>(j);
      ri.chi = chi + table[static_cast<std::size_t>(j)];
    }
    list_.push_back(std::move(ri));
  }
  std::stable_sort(list_.begin(), list_.end(), [](const RealIrreducible& a, const RealIrreducible& b) {
    return compare_characters(a.chi, b.chi) < 0;
  });
  std::map<long long, std::size_t> seen;
  for (auto& ri : list_) ri.label = "V" + std::to_string(ri.degree()) + label_suffix(seen[ri.degree()]++);
}

std::vector<std::string> RealIrreducibles::labels() const {
  std::vector<std::string> out;
  for (const auto& ri : list_) out.push_back(ri.label);
  return out;
}

std::optional<std::size_t> RealIrreducibles::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < list_.size(); ++i)
    if (list_[i].label == label) return i;
  return std::nullopt;
}

std::vector<long long> RealIrreducibles::decompose(const Character& chi) const {
  std::vector<long long> out;
  out.reserve(list_.size());
  for (const auto& ri : list_) {
    mpq_class v = inner_product(chi, ri.chi) / ri.norm();
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
      throw Error(ErrorCode::NotIntegral, "not an integral combination of real irreducibles");
    out.push_back(v.get_num().get_si());
  }
  if (combine(out) != chi) throw Error(ErrorCode::NotIntegral, "class function is not a real virtual character");
  return out;
}

Character RealIrreducibles::combine(const std::vector<long long>& coeffs) const {
  if (coeffs.size() != list_.size()) throw Error(ErrorCode::GroupMismatch, "coefficient count differs");
  Character c = zero_character(classes_);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) c += list_[i].chi * mpq_class(static_cast<long>(coeffs[i]));
  return c;
}

}  // namespace indrep
