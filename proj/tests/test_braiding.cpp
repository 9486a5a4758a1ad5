#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skb/braiding.hpp"
#include "skb/catalog.hpp"

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

std::vector<Elem> flip_rhd(Elem n)
{
  std::vector<Elem> t;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t.push_back(b);
  return t;
}

std::vector<Elem> flip_lhd(Elem n)
{
  std::vector<Elem> t;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t.push_back(a);
  return t;
}

bool braid_holds(PairMap const &r)
{
  return oracle::braid_word(r, {12, 23, 12}) == oracle::braid_word(r, {23, 12, 23});
}

} // namespace

TEST(BraidingFromBrace, TrivialAbelianIsFlip)
{
  for (auto const &g : {catalog::cyclic(2), catalog::cyclic(6), catalog::klein_four()}) {
    auto r = braiding_from_brace(trivial_brace(g));
    EXPECT_EQ(r.as_pair_map(), PairMap::flip(g.order()));
  }
}

TEST(BraidingFromBrace, TrivialS3IsConjugation)
{
  auto s3 = catalog::symmetric3();
  auto r = braiding_from_brace(trivial_brace(s3));
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      EXPECT_EQ(r(a, b), Pair(b, s3.mul(s3.mul(s3.inv(b), a), b)));
}

TEST(BraidingFromBrace, FixtureRhd)
{
  auto s3 = catalog::symmetric3();
  auto r = braiding_from_brace(s3_brace());
  auto ad23 = conjugation_endo(s3, 2);
  for (Elem b = 0; b < 6; ++b)
    EXPECT_EQ(r.rhd(1, b), ad23(b));
}

TEST(BraidingFromBrace, LhdMatchesPointwiseSolve)
{
  for (auto const &b : all_braces_up_to(8)) {
    auto r = braiding_from_brace(b);
    std::vector<Elem> rhd(r.rhd_table().begin(), r.rhd_table().end());
    auto ref = oracle::solve_lhd(b.circ(), rhd);
    EXPECT_TRUE(std::equal(ref.begin(), ref.end(), r.lhd_table().begin()));
  }
}

TEST(BraceFromBraiding, Examples)
{
  auto z6 = catalog::cyclic(6);
  auto flip = validate_braiding(z6, flip_rhd(6), flip_lhd(6));
  EXPECT_EQ(brace_from_braiding(flip), trivial_brace(z6));

  auto s3 = catalog::symmetric3();
  EXPECT_EQ(brace_from_braiding(braiding_from_brace(trivial_brace(s3))), trivial_brace(s3));
  EXPECT_EQ(brace_from_braiding(braiding_from_brace(s3_brace())), s3_brace());
}

TEST(BraceFromBraiding, RoundTripsUpTo8)
{
  for (auto const &b : all_braces_up_to(8)) {
    auto r = braiding_from_brace(b);
    EXPECT_EQ(brace_from_braiding(r), b);
    EXPECT_EQ(braiding_from_brace(brace_from_braiding(r)), r);
  }
}

TEST(BraidingAxioms, FlipOnZ2)
{
  auto z2 = catalog::cyclic(2);
  EXPECT_TRUE(check_braiding_axioms(z2, flip_rhd(2), flip_lhd(2)).all_passed());
}

TEST(BraidingAxioms, FlipOnS3FailsCommutation)
{
  auto s3 = catalog::symmetric3();
  auto rep = check_braiding_axioms(s3, flip_rhd(6), flip_lhd(6));
  EXPECT_TRUE(rep.passed("EqBraid1"));
  EXPECT_TRUE(rep.passed("EqBraidr2"));
  EXPECT_TRUE(rep.passed("EqBraidUnit"));
  EXPECT_FALSE(rep.passed("EqBraidCom"));

  // Least non-commuting pair.
  Witness expected;
  for (Elem a = 0; a < 6 && expected.empty(); ++a)
    for (Elem b = 0; b < 6 && expected.empty(); ++b)
      if (s3.mul(a, b) != s3.mul(b, a))
        expected = {a, b};
  auto const *c = rep.find("EqBraidCom");
  ASSERT_TRUE(c && c->witness);
  EXPECT_EQ(*c->witness, expected);

  try {
    validate_braiding(s3, flip_rhd(6), flip_lhd(6));
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::AxiomsFailed);
  }
}

TEST(BraidingAxioms, IdentityOnZ2FailsUnit)
{
  auto z2 = catalog::cyclic(2);
  auto rep = check_braiding_axioms(z2, flip_lhd(2), flip_rhd(2));
  EXPECT_FALSE(rep.passed("EqBraidUnit"));
  auto const *c = rep.find("EqBraidUnit");
  ASSERT_TRUE(c && c->witness);
  EXPECT_EQ(c->witness->front(), 1u);
}

TEST(BraidRelation, Examples)
{
  EXPECT_TRUE(check_braid_relation(PairMap::flip(5)).all_passed());
  EXPECT_TRUE(check_braid_relation(PairMap::identity(4, 4), true).all_passed());
  for (auto const &b : all_braces_up_to(8)) {
    auto r = braiding_from_brace(b).as_pair_map();
    EXPECT_TRUE(check_braid_relation(r, true).all_passed());
    EXPECT_TRUE(r.is_bijective());
  }
}

TEST(BraidRelation, VerdictMatchesOracle)
{
  // A handful of maps on {0,1,2}, some solutions, some not.
  std::vector<PairMap> maps;
  for (Elem s = 0; s < 3; ++s) {
    std::vector<Pair> shift, mix, collapse;
    for (Elem a = 0; a < 3; ++a)
      for (Elem b = 0; b < 3; ++b) {
        shift.emplace_back((b + s) % 3, (a + 3 - s) % 3);
        mix.emplace_back((a + b + s) % 3, b);
        collapse.emplace_back(std::min(a, b), (b * s) % 3);
      }
    maps.emplace_back(3, 3, shift);
    maps.emplace_back(3, 3, mix);
    maps.emplace_back(3, 3, collapse);
  }
  int failures = 0;
  for (auto const &r : maps) {
    auto rep = check_braid_relation(r);
    EXPECT_EQ(rep.passed("BraidRelation"), braid_holds(r));
    EXPECT_EQ(rep.passed("Bijective"), r.is_bijective());
    failures += !braid_holds(r);
  }
  EXPECT_GT(failures, 0);
}

TEST(PairMapBasics, RangeAndCompose)
{
  EXPECT_THROW(PairMap(2, 2, {{0, 0}, {0, 1}, {1, 0}, {2, 0}}), ValidationError);
  auto f = PairMap::flip(3);
  EXPECT_EQ(compose(f, f), PairMap::identity(3, 3));
}

TEST(TwistedProduct, Z2IsDirectProduct)
{
  auto z2 = catalog::cyclic(2);
  auto t = twisted_product(trivial_brace(z2));
  EXPECT_EQ(t.group.order(), 4u);
  EXPECT_EQ(t.group, catalog::direct_product(z2, z2));
}

TEST(TwistedProduct, S3KernelAndInducedProduct)
{
  auto b = s3_brace();
  auto r = braiding_from_brace(b);
  auto t = twisted_product(b);
  auto const &c = b.circ();
  ASSERT_EQ(t.group.order(), 36u);

  // The product law, recomputed.
  for (Elem x = 0; x < 36; ++x)
    for (Elem y = 0; y < 36; ++y) {
      auto [a1, a2] = t.decode(x);
      auto [b1, b2] = t.decode(y);
      Elem u = c.mul(a1, r.rhd(a2, b1)), v = c.mul(r.lhd(a2, b1), b2);
      ASSERT_EQ(t.group.mul(x, y), t.encode(u, v));
    }

  std::vector<Elem> kernel;
  for (Elem x = 0; x < 36; ++x) {
    auto [p, q] = t.decode(x);
    if (c.mul(p, q) == c.unit())
      kernel.push_back(x);
  }
  EXPECT_EQ(kernel.size(), 6u);
  for (Elem a = 0; a < 6; ++a) {
    EXPECT_EQ(t.iota[a], t.encode(a, c.inv(a)));
    for (Elem bb = 0; bb < 6; ++bb)
      EXPECT_EQ(t.group.mul(t.iota[a], t.iota[bb]), t.iota[b.dot().mul(a, bb)]);
  }
}

TEST(TwistedProduct, InvariantsUpTo6)
{
  for (auto const &b : all_braces_up_to(6)) {
    auto t = twisted_product(b);
    auto const &c = b.circ();
    Elem n = b.order();
    for (Elem a = 0; a < n; ++a)
      for (Elem x = 0; x < n; ++x) {
        // j1(x) iota(a) = iota(rho_x(a)) j1(x)
        EXPECT_EQ(t.group.mul(t.j1[x], t.iota[a]), t.group.mul(t.iota[b.rho(x, a)], t.j1[x]));
        // (a, x) = j1(a o x) iota(x')
        EXPECT_EQ(t.encode(a, x), t.group.mul(t.j1[c.mul(a, x)], t.iota[c.inv(x)]));
      }
  }
  EXPECT_THROW(twisted_product(s3_brace(), 30), ValidationError);
}
