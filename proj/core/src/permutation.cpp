#include "indrep/permutation.hpp"

#include <cctype>
#include <numeric>

#include "indrep/error.hpp"

namespace indrep {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 65535) throw Error(ErrorCode::InvalidPermutation, "degree above 65535");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) { validate_images(images_); }

void validate_images(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      throw Error(ErrorCode::InvalidPermutation, "images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw Error(ErrorCode::InvalidPermutation, "point out of range in cycle");
      if (used[c[i]]) throw Error(ErrorCode::InvalidPermutation, "cycles are not disjoint");
      used[c[i]] = true;
      p.images_[c[i]] = static_cast<Point>(c[(i + 1) % c.size()]);
    }
  }
  return p;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw Error(ErrorCode::ParseError, "unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorCode::ParseError, "unexpected character in cycle: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v == 0 || v > degree)
        throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cyc.push_back(v - 1);
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.degree() != degree()) throw Error(ErrorCode::InvalidPermutation, "degree mismatch in product");
  Permutation r(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.images_[i] = other.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t permutation_order(std::span<const Point> images) {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::uint64_t Permutation::order() const { return permutation_order(images_); }

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

}  // namespace indrep
