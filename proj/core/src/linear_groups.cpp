#include "indrep/linear_groups.hpp"

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

Mat2 mat_mul(const FqField& F, const Mat2& x, const Mat2& y) {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

FqField::E mat_det(const FqField& F, const Mat2& m) { return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)); }

Mat2 mat_inverse(const FqField& F, const Mat2& m) {
  auto di = F.inv(mat_det(F, m));
  return {F.mul(m.d, di), F.mul(F.neg(m.b), di), F.mul(F.neg(m.c), di), F.mul(m.a, di)};
}

Permutation mat_to_permutation(const FqField& F, const Mat2& m) {
  const std::size_t q = F.q();
  std::vector<Point> im(q * q - 1);
  for (std::size_t code = 1; code < q * q; ++code) {
    auto x = static_cast<FqField::E>(code % q), y = static_cast<FqField::E>(code / q);
    auto nx = F.add(F.mul(m.a, x), F.mul(m.b, y));
    auto ny = F.add(F.mul(m.c, x), F.mul(m.d, y));
    im[code - 1] = static_cast<Point>(nx + q * ny - 1);
  }
  return Permutation(std::move(im));
}

Mat2 permutation_to_mat(const FqField& F, std::span<const Point> images) {
  const std::size_t q = F.q();
  // e1 = (1,0) has code 1, e2 = (0,1) has code q.
  std::size_t c1 = images[0] + 1, c2 = images[q - 1] + 1;
  return {static_cast<FqField::E>(c1 % q), static_cast<FqField::E>(c2 % q), static_cast<FqField::E>(c1 / q),
          static_cast<FqField::E>(c2 / q)};
}

FqField field_for_q(std::uint64_t q) {
  auto p = prime_power_base(q);
  if (!p || q > 32) throw Error(ErrorCode::UnsupportedQ, "q must be a prime power at most 32, got " + std::to_string(q));
  unsigned k = 0;
  for (std::uint64_t x = q; x > 1; x /= *p) ++k;
  return FqField::build(*p, k);
}

namespace {

std::vector<Permutation> sl_generators(const FqField& F) {
  std::vector<Permutation> gens;
  auto nu = F.nu();
  for (unsigned i = 0; i < F.k(); ++i) {
    auto t = F.pow(nu, i);
    gens.push_back(mat_to_permutation(F, Mat2{1, t, 0, 1}));
    gens.push_back(mat_to_permutation(F, Mat2{1, 0, t, 1}));
  }
  gens.push_back(mat_to_permutation(F, Mat2{nu, 0, 0, F.inv(nu)}));
  return gens;
}

GroupOptions linear_options(std::size_t q) {
  GroupOptions o;
  o.max_order = (q * q - 1) * (q * q - q);
  return o;
}

FiniteGroup build_sl(const FqField& F) {
  const std::uint64_t q = F.q();
  auto G = FiniteGroup::build(q * q - 1, sl_generators(F), linear_options(q));
  if (G.order() != q * (q * q - 1)) throw Error(ErrorCode::InternalInconsistency, "SL(2,q) has unexpected order");
  return G;
}

FiniteGroup build_gl(const FqField& F) {
  const std::uint64_t q = F.q();
  auto gens = sl_generators(F);
  gens.push_back(mat_to_permutation(F, Mat2{F.nu(), 0, 0, 1}));
  auto G = FiniteGroup::build(q * q - 1, std::move(gens), linear_options(q));
  if (G.order() != (q * q - 1) * (q * q - q)) throw Error(ErrorCode::InternalInconsistency, "GL(2,q) has unexpected order");
  return G;
}

}  // namespace

FiniteGroup sl2(std::uint64_t q) { return build_sl(field_for_q(q)); }
FiniteGroup gl2(std::uint64_t q) { return build_gl(field_for_q(q)); }

LinearGroups linear_groups(std::uint64_t q) {
  FqField F = field_for_q(q);
  LinearGroups L{F, build_sl(F), build_gl(F), {}, {}};
  auto nu = F.nu();
  L.named["1"] = Mat2{1, 0, 0, 1};
  if (q % 2) L.named["z"] = Mat2{F.neg(1), 0, 0, F.neg(1)};
  L.named["c"] = Mat2{1, 0, 1, 1};
  if (q % 2) L.named["d"] = Mat2{1, 0, nu, 1};
  L.named["a"] = Mat2{nu, 0, 0, F.inv(nu)};
  for (const auto& [name, m] : L.named) L.named_sl[name] = L.sl.index_of(mat_to_permutation(F, m));
  for (Elem e = 0; e < L.sl.order(); ++e)
    if (L.sl.elem_order(e) == q + 1) {
      L.named_sl["b"] = e;
      L.named["b"] = permutation_to_mat(F, L.sl.images(e));
      break;
    }
  return L;
}

}  // namespace indrep
