#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "indrep/linear_groups.hpp"
#include "indrep/subgroup.hpp"
#include "indrep_app/corpus.hpp"

using namespace indrep;
using indrep::testing::group_from;

TEST(Permutation, ParseAndCompose) {
  const auto a = Permutation::parse(4, "(1 2 3)");
  const auto b = Permutation::parse(4, "(1 2)");
  EXPECT_EQ(a.order(), 3u);
  // a first, then b: 0 -> 1 -> 0
  const auto ab = a * b;
  EXPECT_EQ(ab[0], 0);
  EXPECT_EQ(ab[1], 2);
  EXPECT_EQ((a * a * a).is_identity(), true);
  EXPECT_EQ(a.inverse() * a, Permutation::identity(4));
  EXPECT_EQ(Permutation::parse(4, "()").to_string(), "()");
  EXPECT_EQ(a.to_string(), "(1 2 3)");
}

TEST(Permutation, Errors) {
  EXPECT_ERROR(Permutation::parse(3, "(1 4)"), ErrorCode::InvalidPermutation);
  EXPECT_ERROR(Permutation::parse(3, "(1 2"), ErrorCode::ParseError);
  EXPECT_ERROR(Permutation(std::vector<Point>{0, 0, 1}), ErrorCode::InvalidPermutation);
  EXPECT_ERROR(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), ErrorCode::InvalidPermutation);
}

TEST(GroupFile, ParseErrorsCarryLineNumbers) {
  try {
    parse_group_spec("degree 3\n(1 2)\n(1 x)\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_ERROR(parse_group_spec("(1 2)\n"), ErrorCode::ParseError);
  const auto spec = parse_group_spec("# comment\n\ndegree 4\n(1 2 3 4) # rotation\n");
  EXPECT_EQ(spec.degree, 4u);
  EXPECT_EQ(spec.generators.size(), 1u);
  EXPECT_EQ(parse_group_spec(format_group_spec(spec)).generators, spec.generators);
}

TEST(FiniteGroup, Orders) {
  EXPECT_EQ(group_from("degree 1\n").order(), 1u);
  EXPECT_EQ(sl2(5).order(), 120u);
  EXPECT_EQ(gl2(5).order(), 480u);
  const auto S4 = group_from("degree 4\n(1 2 3 4)\n(1 2)\n");
  EXPECT_EQ(S4.order(), 24u);
  EXPECT_EQ(S4.exponent(), 12u);
  EXPECT_EQ(S4.identity(), 0u);
  for (Elem g : S4.generator_elems())
    for (Elem h = 0; h < S4.order(); ++h) {
      EXPECT_EQ(S4.mul(S4.inv(h), h), S4.identity());
      EXPECT_EQ(S4.element(S4.mul(h, g)), S4.element(h) * S4.element(g));
    }
}

TEST(FiniteGroup, OrderCap) {
  GroupOptions o;
  o.max_order = 100;
  EXPECT_ERROR(group_from("degree 5\n(1 2 3 4 5)\n(1 2)\n", o), ErrorCode::OrderCapExceeded);
}

TEST(FiniteGroup, ElementLookup) {
  const auto A4 = group_from("degree 4\n(1 2 3)\n(1 2)(3 4)\n");
  EXPECT_ERROR(A4.index_of(Permutation::parse(4, "(1 2)")), ErrorCode::ElementNotInGroup);
  const Elem e = A4.index_of(Permutation::parse(4, "(1 3)(2 4)"));
  EXPECT_EQ(A4.elem_order(e), 2u);
  EXPECT_EQ(A4.pow(e, 2), A4.identity());
}

TEST(Classes, CountsAndSizes) {
  const auto trivial = group_from("degree 1\n");
  EXPECT_EQ(trivial.nclasses(), 1u);
  const auto G = sl2(5);
  ASSERT_EQ(G.nclasses(), 9u);
  EXPECT_EQ(G.classes().orders, (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 5, 6, 10, 10}));
  EXPECT_EQ(std::accumulate(G.classes().sizes.begin(), G.classes().sizes.end(), std::uint64_t{0}), 120u);
  EXPECT_EQ(sl2(4).nclasses(), 5u);
  for (std::size_t c = 0; c < G.nclasses(); ++c)
    for (Elem x : G.classes().members[c])
      for (Elem g : G.generator_elems()) EXPECT_EQ(G.class_of(G.conj(x, g)), c);
}

TEST(Classes, CorpusCounts) {
  // Frozen from tests/oracles/group_oracle.py (order, classes, real classes).
  struct Row {
    const char* name;
    std::size_t order, classes, real;
  };
  for (const Row& r : {Row{"C6", 6, 6, 4}, Row{"A4", 12, 4, 3}, Row{"S4", 24, 5, 5}, Row{"C3xS4", 72, 15, 10},
                       Row{"S3xA4", 72, 12, 9}, Row{"C6xC6", 36, 36, 20}, Row{"G3", 288, 14, 10},
                       Row{"G4", 576, 16, 16}, Row{"AutA6", 1440, 13, 13}, Row{"C6xA4xD30", 2160, 216, 126}}) {
    const auto L = app::load_group(r.name);
    EXPECT_EQ(L.group->order(), r.order) << r.name;
    EXPECT_EQ(L.group->nclasses(), r.classes) << r.name;
    EXPECT_EQ(L.group->nrealclasses(), r.real) << r.name;
  }
}

TEST(Classes, RealClassesClosedUnderInverse) {
  const auto G = app::load_group("C6xC6").group;
  const auto& rc = G->real_classes();
  for (std::size_t r = 0; r < rc.count(); ++r)
    for (auto c : rc.members[r]) EXPECT_EQ(rc.real_of_class[G->classes().inverse[c]], r);
}

TEST(Classes, CentralizerOrders) {
  const auto L = linear_groups(5);
  const Elem b = L.named_sl.at("b");
  EXPECT_EQ(L.sl.centralizer_order(b), 6u);  // q + 1
  EXPECT_EQ(L.gl.centralizer_order(L.gl.index_of(L.sl.element(b))), 24u);  // q^2 - 1
  EXPECT_EQ(L.sl.centralizer_order(L.sl.identity()), 120u);
}

TEST(Subgroups, NormalSubgroups) {
  auto orders = [](const FiniteGroup& G) {
    std::vector<std::size_t> o;
    for (const auto& N : normal_subgroups(G)) o.push_back(N.order());
    std::sort(o.begin(), o.end());
    return o;
  };
  EXPECT_EQ(orders(sl2(5)), (std::vector<std::size_t>{1, 2, 120}));
  EXPECT_EQ(orders(group_from("degree 6\n(1 2 3 4 5 6)\n")), (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(orders(*app::load_group("AutA6").group), (std::vector<std::size_t>{1, 360, 720, 720, 720, 1440}));
  EXPECT_EQ(orders(*app::load_group("G4").group),
            (std::vector<std::size_t>{1, 16, 48, 48, 96, 96, 144, 288, 288, 288, 576}));
}

TEST(Subgroups, ResidualsAndQuotients) {
  const auto C6C6 = app::load_group("C6xC6").group;
  EXPECT_EQ(nilpotent_residual(*C6C6).order(), 1u);
  const auto S4 = group_from("degree 4\n(1 2 3 4)\n(1 2)\n");
  EXPECT_EQ(nilpotent_residual(S4).order(), 12u);
  EXPECT_EQ(o_p_residual(S4, 2).order(), 12u);
  EXPECT_EQ(o_p_residual(S4, 3).order(), 24u);
  EXPECT_ERROR(o_p_residual(S4, 4), ErrorCode::NotPrime);

  const auto G = app::load_group("C6xA4xD30").group;
  const Subgroup R = nilpotent_residual(*G);
  EXPECT_EQ(R.order(), 60u);
  const Quotient Q = quotient_group(*G, R);
  EXPECT_EQ(Q.group.order(), 36u);
  EXPECT_EQ(Q.group.nrealclasses(), 20u);

  const auto L = linear_groups(5);
  std::vector<Elem> gens;
  for (const auto& g : L.sl.generators()) gens.push_back(L.gl.index_of(g));
  const Quotient det = quotient_group(L.gl, generate(L.gl, gens));
  EXPECT_EQ(det.group.order(), 4u);
  EXPECT_TRUE(is_cyclic(det.group, whole_group(det.group)));
  EXPECT_EQ(quotient_group(S4, whole_group(S4)).group.order(), 1u);
  Subgroup H = generate(S4, std::vector<Elem>{S4.index_of(Permutation::parse(4, "(1 2)"))});
  EXPECT_ERROR(quotient_group(S4, H), ErrorCode::NotNormal);
}

TEST(Subgroups, DirectProduct) {
  const auto A = sl2(5);
  const auto C2 = group_from("degree 2\n(1 2)\n");
  const auto P = direct_product(A, C2);
  EXPECT_EQ(P.order(), 240u);
  EXPECT_EQ(P.nclasses(), 18u);
  const auto T = direct_product(A, group_from("degree 1\n"));
  EXPECT_EQ(T.order(), A.order());
  EXPECT_EQ(T.nclasses(), A.nclasses());
}

TEST(Subgroups, Fingerprints) {
  const auto G3 = app::load_group("G3").group;
  const auto fp = fingerprint(*G3);
  EXPECT_EQ(fp.order, 288u);
  EXPECT_EQ(fp.nclasses, 14u);
  EXPECT_EQ(fp.class_profile.size(), 14u);
  EXPECT_EQ(fp.class_profile.front(), (std::pair<std::uint32_t, std::uint64_t>{1, 1}));
}
