#include "indrep/group.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>
#include <string_view>

#include "indrep/error.hpp"

namespace indrep {

namespace {

constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

std::size_t hash_images(std::span<const Point> images) {
  std::string_view bytes(reinterpret_cast<const char*>(images.data()), images.size_bytes());
  return std::hash<std::string_view>{}(bytes);
}

}  // namespace

std::uint32_t ConjugacyClasses::power(std::size_t cls, long long k) const {
  long long o = orders[cls];
  long long r = ((k % o) + o) % o;
  return power_map[cls][static_cast<std::size_t>(r)];
}

std::size_t FiniteGroup::slot_for(std::span<const Point> images) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_images(images) & mask;
  while (slots_[s] != kEmpty) {
    auto cand = this->images(slots_[s]);
    if (std::equal(cand.begin(), cand.end(), images.begin())) return s;
    s = (s + 1) & mask;
  }
  return s;
}

std::optional<Elem> FiniteGroup::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  std::size_t s = slot_for(images);
  if (slots_[s] == kEmpty) return std::nullopt;
  return slots_[s];
}

Elem FiniteGroup::index_of(const Permutation& p) const {
  auto e = find(p.images());
  if (!e) throw Error(ErrorCode::ElementNotInGroup, p.to_string());
  return *e;
}

Elem FiniteGroup::insert_or_find(std::span<const Point> images, bool& inserted) {
  std::size_t s = slot_for(images);
  if (slots_[s] != kEmpty) {
    inserted = false;
    return slots_[s];
  }
  inserted = true;
  Elem e = static_cast<Elem>(order_);
  perms_.insert(perms_.end(), images.begin(), images.end());
  slots_[s] = e;
  ++order_;
  if (order_ * 2 > slots_.size()) {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    for (Elem x = 0; x < order_; ++x) slots_[slot_for(this->images(x))] = x;
  }
  return e;
}

FiniteGroup FiniteGroup::build(std::size_t degree, std::vector<Permutation> generators, const GroupOptions& opts) {
  if (degree == 0) degree = 1;
  FiniteGroup g;
  g.degree_ = degree;
  for (auto& p : generators) {
    if (p.degree() != degree) throw Error(ErrorCode::InvalidPermutation, "generator degree does not match group degree");
    validate_images(p.images());
  }
  g.generators_ = std::move(generators);
  g.enumerate(opts);
  if (g.order_ <= opts.cayley_limit) g.build_cayley();
  g.compute_classes();
  return g;
}

void FiniteGroup::enumerate(const GroupOptions& opts) {
  const std::size_t ng = generators_.size();
  slots_.assign(16, kEmpty);
  Permutation id(degree_);
  bool ins = false;
  insert_or_find(id.images(), ins);
  parent_.push_back(0);
  parent_gen_.push_back(0);
  std::vector<Point> buf(degree_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < ng; ++j) {
      auto x = images(static_cast<Elem>(i));
      auto gj = generators_[j].images();
      for (std::size_t k = 0; k < degree_; ++k) buf[k] = gj[x[k]];
      Elem r = insert_or_find(buf, ins);
      if (ins) {
        if (order_ > opts.max_order)
          throw Error(ErrorCode::OrderCapExceeded, "group order exceeds cap " + std::to_string(opts.max_order));
        parent_.push_back(static_cast<Elem>(i));
        parent_gen_.push_back(static_cast<std::uint16_t>(j));
      }
      right_gen_.push_back(r);
    }
  }
  for (const auto& p : generators_) generator_elems_.push_back(*find(p.images()));

  inverse_.resize(order_);
  elem_orders_.resize(order_);
  left_gen_inv_.resize(order_ * ng);
  std::vector<std::vector<Point>> gen_inv(ng);
  for (std::size_t j = 0; j < ng; ++j) {
    auto inv = generators_[j].inverse();
    gen_inv[j].assign(inv.images().begin(), inv.images().end());
  }
  exponent_ = 1;
  for (Elem e = 0; e < order_; ++e) {
    auto x = images(e);
    for (std::size_t k = 0; k < degree_; ++k) buf[x[k]] = static_cast<Point>(k);
    inverse_[e] = *find(buf);
    elem_orders_[e] = static_cast<std::uint32_t>(permutation_order(x));
    exponent_ = std::lcm(exponent_, std::uint64_t{elem_orders_[e]});
    for (std::size_t j = 0; j < ng; ++j) {
      for (std::size_t k = 0; k < degree_; ++k) buf[k] = x[gen_inv[j][k]];
      left_gen_inv_[e * ng + j] = *find(buf);
    }
  }
}

void FiniteGroup::build_cayley() {
  const std::size_t n = order_, ng = generators_.size();
  cayley_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = cayley_.data() + a * n;
    row[0] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right_gen_[std::size_t(row[parent_[b]]) * ng + parent_gen_[b]];
  }
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!cayley_.empty()) return cayley_[std::size_t(a) * order_ + b];
  std::uint16_t word[256];
  std::vector<std::uint16_t> long_word;
  std::size_t len = 0;
  const std::size_t ng = generators_.size();
  for (Elem x = b; x != 0; x = parent_[x]) {
    if (len < 256) {
      word[len++] = parent_gen_[x];
    } else {
      long_word.push_back(parent_gen_[x]);
    }
  }
  Elem r = a;
  for (auto it = long_word.rbegin(); it != long_word.rend(); ++it) r = right_gen_[std::size_t(r) * ng + *it];
  while (len) r = right_gen_[std::size_t(r) * ng + word[--len]];
  return r;
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  Elem r = 0, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Elem FiniteGroup::conj_by_generator(Elem x, std::size_t j) const {
  const std::size_t ng = generators_.size();
  return right_gen_[std::size_t(left_gen_inv_[std::size_t(x) * ng + j]) * ng + j];
}

std::vector<std::uint16_t> FiniteGroup::word(Elem e) const {
  std::vector<std::uint16_t> w;
  for (Elem x = e; x != 0; x = parent_[x]) w.push_back(parent_gen_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

Permutation FiniteGroup::element(Elem e) const {
  auto im = images(e);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

bool FiniteGroup::lex_less(Elem a, Elem b) const {
  auto x = images(a), y = images(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

void FiniteGroup::compute_classes() {
  const std::size_t ng = generators_.size();
  std::vector<std::uint32_t> raw_class(order_, kEmpty);
  std::vector<std::vector<Elem>> orbits;
  for (Elem e = 0; e < order_; ++e) {
    if (raw_class[e] != kEmpty) continue;
    std::uint32_t id = static_cast<std::uint32_t>(orbits.size());
    std::vector<Elem> orbit{e};
    raw_class[e] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t j = 0; j < ng; ++j) {
        Elem y = conj_by_generator(orbit[i], j);
        if (raw_class[y] == kEmpty) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    orbits.push_back(std::move(orbit));
  }
  struct Key {
    std::uint32_t order;
    Elem rep;
    std::size_t raw;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    Elem rep = *std::min_element(orbits[i].begin(), orbits[i].end(), [&](Elem a, Elem b) { return lex_less(a, b); });
    keys.push_back({elem_orders_[rep], rep, i});
  }
  std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    if (a.order != b.order) return a.order < b.order;
    return lex_less(a.rep, b.rep);
  });
  const std::size_t r = keys.size();
  std::vector<std::uint32_t> raw_to_final(r);
  classes_ = ConjugacyClasses{};
  for (std::size_t i = 0; i < r; ++i) {
    raw_to_final[keys[i].raw] = static_cast<std::uint32_t>(i);
    classes_.reps.push_back(keys[i].rep);
    classes_.orders.push_back(keys[i].order);
    auto members = std::move(orbits[keys[i].raw]);
    std::sort(members.begin(), members.end());
    classes_.sizes.push_back(members.size());
    classes_.members.push_back(std::move(members));
  }
  classes_.class_of.resize(order_);
  for (Elem e = 0; e < order_; ++e) classes_.class_of[e] = raw_to_final[raw_class[e]];
  classes_.inverse.resize(r);
  classes_.power_map.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    Elem rep = classes_.reps[i];
    classes_.inverse[i] = classes_.class_of[inverse_[rep]];
    Elem x = 0;
    classes_.power_map[i].resize(classes_.orders[i]);
    for (std::uint32_t k = 0; k < classes_.orders[i]; ++k) {
      classes_.power_map[i][k] = classes_.class_of[x];
      x = mul(x, rep);
    }
  }
  real_ = RealClasses{};
  real_.real_of_class.assign(r, kEmpty);
  for (std::uint32_t i = 0; i < r; ++i) {
    if (real_.real_of_class[i] != kEmpty) continue;
    std::uint32_t id = static_cast<std::uint32_t>(real_.members.size());
    std::uint32_t j = classes_.inverse[i];
    real_.real_of_class[i] = id;
    if (j != i) {
      real_.real_of_class[j] = id;
      real_.members.push_back({i, j});
    } else {
      real_.members.push_back({i});
    }
    real_.reps.push_back(classes_.reps[i]);
  }
}

std::string FiniteGroup::describe() const {
  return "order " + std::to_string(order_) + ", degree " + std::to_string(degree_) + ", " +
         std::to_string(nclasses()) + " classes";
}

}  // namespace indrep
