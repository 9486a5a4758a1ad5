#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "skb/brace_action.hpp"
#include "skb/catalog.hpp"
#include "skb/skew_brace.hpp"

using namespace skb;

namespace
{

std::vector<SkewBrace> all_braces_up_to(Elem n)
{
  std::vector<SkewBrace> out;
  for (Elem k = 1; k <= n; ++k)
    for (auto const &[name, g] : catalog::groups_of_order(k)) {
      auto bs = enumerate_skew_braces(g);
      out.insert(out.end(), bs.begin(), bs.end());
    }
  return out;
}

} // namespace

TEST(ValidateSkewBrace, Examples)
{
  auto z2 = catalog::cyclic(2);
  EXPECT_NO_THROW(validate_skew_brace(z2, z2));
  EXPECT_NO_THROW(s3_brace());

  try {
    validate_skew_brace(catalog::cyclic(2), catalog::cyclic(3));
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::OrderMismatch);
  }

  // Same carrier, Z2 labelled with different units.
  auto z2u1 = validate_group(Table{{1, 0}, {0, 1}}, 1);
  try {
    validate_skew_brace(z2, z2u1);
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::UnitMismatch);
  }

  // circ = Z6, dot = S3 with the identity labelling is not a brace.
  try {
    validate_skew_brace(catalog::cyclic(6), catalog::symmetric3());
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::DistributivityFailed);
    ASSERT_EQ(e.witness().size(), 3u);
  }
}

TEST(ValidateSkewBrace, KleinDotCyclicCirc)
{
  auto klein = catalog::klein_four();
  auto z4 = catalog::cyclic(4);
  bool found = false;
  for (auto const &b : enumerate_skew_braces(klein))
    found = found || find_group_isomorphism(b.circ(), z4).has_value();
  EXPECT_TRUE(found);
}

TEST(LambdaRho, Examples)
{
  auto s3 = catalog::symmetric3();
  auto triv = trivial_brace(s3);
  auto lr = lambda_rho(triv);
  for (Elem a = 0; a < 6; ++a) {
    EXPECT_EQ(lr.lambda_map(a), identity_endo(6));
    EXPECT_EQ(lr.rho_map(a), conjugation_endo(s3, a));
  }

  auto b = s3_brace();
  auto blr = lambda_rho(b);
  EXPECT_EQ(blr.lambda_map(b.unit()), identity_endo(6));
  EXPECT_EQ(blr.rho_map(b.unit()), identity_endo(6));
  auto ad23 = conjugation_endo(s3, 2);
  for (Elem t : {1u, 2u, 3u})
    EXPECT_EQ(blr.lambda_map(t), ad23);
  for (Elem e : {0u, 4u, 5u})
    EXPECT_EQ(blr.lambda_map(e), identity_endo(6));
  EXPECT_EQ(blr.rho_map(2), identity_endo(6));
  EXPECT_EQ(element_order(b.circ(), 1), 6u);
}

TEST(LambdaRho, ActionsByAutomorphismsUpTo8)
{
  for (auto const &b : all_braces_up_to(8)) {
    Elem n = b.order();
    auto const &dot = b.dot();
    auto lr = lambda_rho(b);
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c) {
        Elem ac = b.circ().mul(a, c);
        for (Elem x = 0; x < n; ++x) {
          ASSERT_EQ(b.lambda(ac, x), b.lambda(a, b.lambda(c, x)));
          ASSERT_EQ(b.rho(ac, x), b.rho(a, b.rho(c, x)));
          ASSERT_EQ(b.lambda(a, dot.mul(c, x)), dot.mul(b.lambda(a, c), b.lambda(a, x)));
          ASSERT_EQ(b.rho(a, dot.mul(c, x)), dot.mul(b.rho(a, c), b.rho(a, x)));
        }
        // rho_a = alpha_a^-1 lambda_a
        ASSERT_EQ(b.rho(a, c), dot.mul(dot.mul(a, b.lambda(a, c)), dot.inv(a)));
        ASSERT_EQ(lr.lambda[a * n + c], b.lambda(a, c));
      }
  }
}

TEST(Constructions, TrivialAndOpposite)
{
  auto z2 = trivial_brace(catalog::cyclic(2));
  EXPECT_EQ(lambda_rho(z2).rho_map(1), identity_endo(2));

  auto z6 = trivial_brace(catalog::cyclic(6));
  EXPECT_EQ(opposite_brace(z6), z6);

  auto b = s3_brace();
  auto op = opposite_brace(b);
  EXPECT_NE(op, b);
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      EXPECT_EQ(op.dot().mul(x, y), b.dot().mul(y, x));
  EXPECT_EQ(opposite_brace(op), b);
}

TEST(Enumerate, SmallCounts)
{
  EXPECT_EQ(enumerate_skew_braces(catalog::cyclic(2)).size(), 1u);
  EXPECT_EQ(enumerate_skew_braces(catalog::cyclic(3)).size(), 1u);

  auto s3 = enumerate_skew_braces(catalog::symmetric3());
  bool cyclic_circ = false;
  for (auto const &b : s3)
    cyclic_circ = cyclic_circ || find_group_isomorphism(b.circ(), catalog::cyclic(6));
  EXPECT_TRUE(cyclic_circ);
}

TEST(Enumerate, AgreesWithNaiveSearchUpTo6)
{
  for (Elem n = 1; n <= 6; ++n)
    for (auto const &[name, g] : catalog::groups_of_order(n)) {
      auto lib = enumerate_skew_braces(g);
      auto ref = oracle::brace_tables(g);
      ASSERT_EQ(lib.size(), ref.size()) << name;
      for (std::size_t i = 0; i < lib.size(); ++i) {
        auto flat = lib[i].circ().flat_table();
        EXPECT_EQ(std::vector<Elem>(flat.begin(), flat.end()), ref[i]) << name;
      }
    }
}

TEST(Enumerate, ContainsTrivialBraceAndIsSorted)
{
  for (Elem n = 1; n <= 8; ++n)
    for (auto const &[name, g] : catalog::groups_of_order(n)) {
      auto bs = enumerate_skew_braces(g);
      EXPECT_NE(std::find(bs.begin(), bs.end(), trivial_brace(g)), bs.end()) << name;
      for (std::size_t i = 1; i < bs.size(); ++i) {
        auto l = bs[i - 1].circ().flat_table(), r = bs[i].circ().flat_table();
        EXPECT_TRUE(std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end()));
      }
    }
}

TEST(Enumerate, OrderEightClassCounts)
{
  // Labelled circ tables and isomorphism classes per additive group.
  std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"Z8", {6, 5}},  {"Z4xZ2", {28, 14}}, {"Z2xZ2xZ2", {232, 8}},
      {"D4", {20, 12}}, {"Q8", {28, 8}}};
  std::size_t classes = 0;
  for (auto const &[name, g] : catalog::groups_of_order(8)) {
    auto bs = enumerate_skew_braces(g);
    auto reps = isomorphism_class_representatives(bs);
    EXPECT_EQ(bs.size(), expected[name].first) << name;
    EXPECT_EQ(reps.size(), expected[name].second) << name;
    classes += reps.size();

    // Representatives are pairwise non-isomorphic.
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_FALSE(find_brace_isomorphism(bs[reps[i]], bs[reps[j]])) << name;
  }
  EXPECT_EQ(classes, 47u);
}

TEST(Enumerate, ClassCountsUpTo6)
{
  std::size_t labelled = 0, classes = 0;
  for (Elem n : {4u, 6u}) {
    labelled = classes = 0;
    for (auto const &[name, g] : catalog::groups_of_order(n)) {
      auto bs = enumerate_skew_braces(g);
      labelled += bs.size();
      classes += isomorphism_class_representatives(bs).size();
    }
    EXPECT_EQ(labelled, n == 4 ? 6u : 10u);
    EXPECT_EQ(classes, n == 4 ? 4u : 6u);
  }
}

TEST(Enumerate, TooLarge)
{
  try {
    enumerate_skew_braces(catalog::cyclic(9));
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::OrderTooLarge);
  }
  auto z9 = enumerate_skew_braces(catalog::cyclic(9), {.max_order = 9});
  EXPECT_NE(std::find(z9.begin(), z9.end(), trivial_brace(catalog::cyclic(9))), z9.end());
}

TEST(Isomorphism, FixtureMatchesEnumeratedBrace)
{
  auto fixture = s3_brace();
  std::size_t matches = 0;
  for (auto const &b : enumerate_skew_braces(catalog::symmetric3())) {
    auto phi = find_brace_isomorphism(fixture, b);
    if (!phi)
      continue;
    ++matches;
    EXPECT_TRUE(oracle::is_group_hom(fixture.circ(), b.circ(), *phi));
    EXPECT_TRUE(oracle::is_group_hom(fixture.dot(), b.dot(), *phi));
  }
  EXPECT_GE(matches, 1u);
}

TEST(BraceCriterion, IdentityFixedIffDotAbelian)
{
  for (auto const &b : all_braces_up_to(8)) {
    Endo id = identity_endo(b.order());
    bool fixed = true;
    for (Elem a = 0; a < b.order() && fixed; ++a)
      fixed = diamond(b, a, id) == id;
    EXPECT_EQ(fixed, b.dot().is_abelian());
  }
}
