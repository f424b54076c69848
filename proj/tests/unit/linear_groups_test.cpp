#include "helpers.hpp"
#include "indrep/finite_field.hpp"
#include "indrep/linear_groups.hpp"

using namespace indrep;

TEST(FiniteField, SmallFields) {
  const auto F2 = FqField::build(2, 1);
  EXPECT_EQ(F2.q(), 2u);
  EXPECT_EQ(F2.nu(), 1);
  const auto F4 = FqField::build(2, 2);
  EXPECT_EQ(F4.modulus(), (std::vector<unsigned>{1, 1, 1}));  // x^2 + x + 1
  const auto F5 = FqField::build(5, 1);
  EXPECT_TRUE(F5.nu() == 2 || F5.nu() == 3);
  EXPECT_EQ(F5.mult_order(F5.nu()), 4u);
  EXPECT_ERROR(FqField::build(6, 1), ErrorCode::NotPrime);
  EXPECT_ERROR(FqField::build(2, 9), ErrorCode::DegreeTooLarge);
}

TEST(FiniteField, Axioms) {
  for (auto [p, k] : {std::pair<unsigned, unsigned>{3, 2}, {2, 3}, {7, 1}}) {
    const auto F = FqField::build(p, k);
    EXPECT_EQ(F.mult_order(F.nu()), F.q() - 1);
    for (FqField::E a = 0; a < F.q(); ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
      for (FqField::E b = 0; b < F.q(); ++b) EXPECT_EQ(F.mul(a, b), F.mul(b, a));
    }
  }
}

TEST(LinearGroups, Orders) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto L = linear_groups(q);
    EXPECT_EQ(L.sl.order(), q * (q * q - 1)) << q;
    EXPECT_EQ(L.gl.order(), (q * q - 1) * (q * q - q)) << q;
    EXPECT_EQ(L.sl.degree(), q * q - 1);
  }
  EXPECT_ERROR(linear_groups(6), ErrorCode::UnsupportedQ);
  EXPECT_ERROR(linear_groups(37), ErrorCode::UnsupportedQ);
}

TEST(LinearGroups, NamedElements) {
  const auto L = linear_groups(5);
  const auto& n = L.named_sl;
  EXPECT_EQ(L.sl.elem_order(n.at("z")), 2u);
  EXPECT_EQ(L.sl.elem_order(n.at("c")), 5u);
  EXPECT_EQ(L.sl.elem_order(n.at("d")), 5u);
  EXPECT_EQ(L.sl.elem_order(n.at("a")), 4u);
  EXPECT_EQ(L.sl.elem_order(n.at("b")), 6u);
  EXPECT_NE(L.sl.class_of(n.at("c")), L.sl.class_of(n.at("d")));
  for (const auto& [name, m] : L.named) EXPECT_EQ(mat_det(L.field, m), L.field.one()) << name;
  const auto L4 = linear_groups(4);
  EXPECT_EQ(L4.named_sl.count("z"), 0u);
  EXPECT_EQ(L4.sl.elem_order(L4.named_sl.at("b")), 5u);
}

TEST(LinearGroups, MatrixRoundTrip) {
  const auto L = linear_groups(7);
  for (Elem e = 0; e < L.gl.order(); e += 97) {
    const Mat2 m = permutation_to_mat(L.field, L.gl.images(e));
    EXPECT_EQ(mat_to_permutation(L.field, m), L.gl.element(e));
    EXPECT_EQ(mat_mul(L.field, m, mat_inverse(L.field, m)), Mat2{});
  }
}
