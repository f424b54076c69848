#include "helpers.hpp"
#include "indrep/cyclotomic.hpp"

using namespace indrep;

TEST(Cyclotomic, ZetaRelations) {
  const auto z3 = Cyclotomic::zeta(3);
  EXPECT_EQ(z3 * z3 * z3, Cyclotomic(1));
  EXPECT_EQ(Cyclotomic(1) + z3 + z3 * z3, Cyclotomic(0));
  EXPECT_EQ(z3.conj(), z3 * z3);
  EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(4), Cyclotomic(-1));
  EXPECT_TRUE((Cyclotomic::zeta(6) * Cyclotomic::zeta(6) * Cyclotomic::zeta(6)).is_rational());
}

TEST(Cyclotomic, SquareRootOfFive) {
  const auto s = quadratic_gauss_sum(5);
  EXPECT_EQ(s * s, Cyclotomic(5));
  EXPECT_EQ(s.conj(), s);
  const Cyclotomic golden = (Cyclotomic(1) + s) * mpq_class(1, 2);
  EXPECT_EQ(golden * golden, golden + Cyclotomic(1));
  EXPECT_NEAR(golden.to_complex().real(), 1.6180339887, 1e-9);
  EXPECT_EQ(s.galois(2), -s);
}

TEST(Cyclotomic, CanonicalFormAndLifting) {
  const auto z5 = Cyclotomic::zeta(5);
  const auto lifted = z5.lifted(15);
  EXPECT_EQ(lifted.conductor(), 15u);
  EXPECT_EQ(lifted, z5);
  EXPECT_EQ(lifted.canonical().conductor(), 5u);
  EXPECT_EQ(lifted.canonical().coeffs(), z5.coeffs());
  const auto sum = Cyclotomic::zeta(3) + Cyclotomic::zeta(5);
  EXPECT_EQ(sum - Cyclotomic::zeta(5), Cyclotomic::zeta(3));
  EXPECT_TRUE((sum - sum).is_zero());
}

TEST(Cyclotomic, RationalArithmetic) {
  Cyclotomic a(mpq_class(3, 4));
  a += Cyclotomic(1);
  EXPECT_TRUE(a.is_rational());
  EXPECT_EQ(a.rational(), mpq_class(7, 4));
  EXPECT_FALSE(a.is_integer());
  EXPECT_EQ((a / mpq_class(7, 4)).rational(), 1);
}
