#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skb/catalog.hpp"
#include "skb/reflection.hpp"

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

bool re_holds(PairMap const &r, PairMap const &k)
{
  auto [lhs, rhs] = oracle::reflection_sides(r, k);
  return lhs == rhs;
}

ReflectionMap k_translate(SkewBrace const &b, GroupAction const &act)
{
  std::vector<Pair> t;
  for (Elem a = 0; a < b.order(); ++a)
    for (Elem x = 0; x < act.set_size(); ++x)
      t.emplace_back(b.unit(), act.act(a, x));
  return ReflectionMap(b.order(), act.set_size(), t);
}

} // namespace

TEST(ReflectionEquation, SquareOfBraidingSolves)
{
  for (auto const &b : all_braces_up_to(6)) {
    auto r = braiding_from_brace(b).as_pair_map();
    auto k = compose(r, r);
    EXPECT_TRUE(check_reflection_equation(r, k).all_passed());
    EXPECT_TRUE(re_holds(r, k));
  }
  auto f = PairMap::flip(4);
  EXPECT_TRUE(check_reflection_equation(f, compose(f, f)).all_passed());
}

TEST(ReflectionEquation, FlipWithIdentity)
{
  auto rep = check_reflection_equation(PairMap::flip(3), PairMap::identity(3, 5));
  EXPECT_TRUE(rep.all_passed());
  EXPECT_TRUE(rep.find("KBijective")->informational);
}

TEST(ReflectionEquation, FlipWithPartialSwap)
{
  // Swap (0, 0) <-> (1, 0) and fix everything else on Z2 x {0, 1}.
  ReflectionMap k(2, 2, {{1, 0}, {0, 1}, {0, 0}, {1, 1}});
  auto r = PairMap::flip(2);
  auto rep = check_reflection_equation(r, k);
  EXPECT_EQ(rep.passed("EqRE"), re_holds(r, k));
}

TEST(ReflectionEquation, VerdictAndWitnessMatchOracle)
{
  auto r = braiding_from_brace(s3_brace()).as_pair_map();
  int failing = 0;
  // A family of maps on A x {0, 1}.
  for (Elem s = 0; s < 6; ++s) {
    std::vector<Pair> t;
    for (Elem a = 0; a < 6; ++a)
      for (Elem x = 0; x < 2; ++x)
        t.emplace_back((a + s * x) % 6, (x + (a == s)) % 2);
    ReflectionMap k(6, 2, t);
    auto w = reflection_violation(r, k);
    auto [lhs, rhs] = oracle::reflection_sides(r, k);
    EXPECT_EQ(!w, lhs == rhs);
    if (w) {
      ++failing;
      std::size_t first = std::mismatch(lhs.begin(), lhs.end(), rhs.begin()).first - lhs.begin();
      Elem a = static_cast<Elem>(first / 12), bb = static_cast<Elem>((first / 2) % 6),
           x = static_cast<Elem>(first % 2);
      EXPECT_EQ(*w, (Witness{a, bb, x}));
    }
  }
  EXPECT_GT(failing, 0);
}

TEST(ReflectionEquation, ReportsBrokenR)
{
  std::vector<Pair> t;
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      t.emplace_back((a + b) % 3, b);
  PairMap r(3, 3, t);
  auto rep = check_reflection_equation(r, PairMap::identity(3, 1));
  EXPECT_EQ(rep.passed("r.BraidRelation"),
            oracle::braid_word(r, {12, 23, 12}) == oracle::braid_word(r, {23, 12, 23}));
}

TEST(BraidedAction, SquareIsBraided)
{
  for (auto const &b : all_braces_up_to(6)) {
    auto r = braiding_from_brace(b);
    auto ks = k_squared(r);
    auto rep = check_braided_action(r, ks.act, ks.k);
    EXPECT_TRUE(rep.braided());
    EXPECT_TRUE(rep.report.passed("EqRE"));
    EXPECT_TRUE(rep.report.passed("BraidedImpliesRE"));
    EXPECT_EQ(ks.k, compose(r.as_pair_map(), r.as_pair_map()));
  }
  auto flip = braiding_from_brace(trivial_brace(catalog::cyclic(5)));
  EXPECT_EQ(k_squared(flip).k, PairMap::identity(5, 5));
}

TEST(BraidedAction, TrivialExtensionIsBraided)
{
  auto b = s3_brace();
  auto act = left_translation(b.circ());
  auto rep = check_braided_action(braiding_from_brace(b), act, k_translate(b, act));
  EXPECT_TRUE(rep.braided());
}

TEST(BraidedAction, IdentityKOnConjugationBraiding)
{
  auto s3 = catalog::symmetric3();
  auto b = trivial_brace(s3);
  auto r = braiding_from_brace(b);
  auto act = left_translation(s3);
  auto rep = check_braided_action(r, act, PairMap::identity(6, 6));
  EXPECT_TRUE(rep.report.passed("EqUnitk"));
  EXPECT_TRUE(rep.report.passed("EqTrivmXk"));
  // With k = id the EqBraid2 right side collapses to (a |> b) o (a <| b) = a o b.
  EXPECT_TRUE(rep.report.passed("EqBraid2"));
  // EqBraidk1 collapses to k(a, b o x) = (p, q o x) with (p, q) = r(r(a, b)).
  EXPECT_FALSE(rep.report.passed("EqBraidk1"));
  EXPECT_EQ(rep.classification, Classification::neither);

  Witness expected;
  for (Elem a = 0; a < 6 && expected.empty(); ++a)
    for (Elem bb = 0; bb < 6 && expected.empty(); ++bb)
      for (Elem x = 0; x < 6 && expected.empty(); ++x) {
        auto [a1, b1] = r(a, bb);
        auto [p, q] = r(a1, b1);
        if (p != a || s3.mul(q, x) != s3.mul(bb, x))
          expected = {a, bb, x};
      }
  auto const *c = rep.report.find("EqBraidk1");
  ASSERT_TRUE(c && c->witness);
  EXPECT_EQ(*c->witness, expected);
}

TEST(KFromAction, Examples)
{
  auto b = s3_brace();
  auto r = braiding_from_brace(b);

  auto act = left_translation(b.circ());
  auto triv = trivial_extension(b, act);
  EXPECT_EQ(k_from_action(triv), k_translate(b, act));

  EXPECT_EQ(k_from_action(standard_action(b)), k_squared(r).k);

  auto u = universal_action(b);
  auto k = k_from_action(u);
  EXPECT_TRUE(check_braided_action(r, u.circ_act, k).braided());
  EXPECT_TRUE(re_holds(r.as_pair_map(), k));
}

TEST(KFromAction, FormulaAndFirstLeg)
{
  for (auto const &b : all_braces_up_to(6)) {
    auto const &c = b.circ();
    auto u = universal_action(b);
    auto k = k_from_action(u);
    for (Elem a = 0; a < b.order(); ++a)
      for (Elem x = 0; x < u.set_size(); ++x) {
        Elem ax = u.circ_act.act(a, x);
        Elem first = u.pi_at(ax, a);
        auto [p, q] = k(a, x);
        EXPECT_EQ(p, first);
        EXPECT_EQ(q, u.circ_act.act(c.mul(c.inv(first), a), x));
        // Direct read: pi_{a o x}(a) = first(k(a, x)).
        EXPECT_EQ(p, u.pi[ax](a));
      }
  }
}

TEST(ActionFromK, Examples)
{
  auto b = s3_brace();
  auto r = braiding_from_brace(b);
  auto act = left_translation(b.circ());

  auto t = action_from_k(b, act, k_translate(b, act));
  EXPECT_EQ(t, trivial_extension(b, act));

  auto ks = k_squared(r);
  auto s = action_from_k(b, ks.act, ks.k);
  for (Elem x = 0; x < 6; ++x)
    EXPECT_EQ(s.pi[x], conjugation_endo(b.dot(), x, Conjugation::alpha));

  try {
    action_from_k(b, act, PairMap::identity(6, 6));
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::NotBraided);
  }
}

TEST(ActionFromK, RoundTripsUpTo6)
{
  for (auto const &b : all_braces_up_to(6)) {
    auto lt = left_translation(b.circ());
    for (auto const &a : {trivial_extension(b, lt), standard_action(b), universal_action(b)}) {
      auto k = k_from_action(a);
      auto back = action_from_k(b, a.circ_act, k);
      EXPECT_EQ(back, a);
      EXPECT_EQ(k_from_action(back), k);
    }
  }
}

TEST(BetaMachinery, TrivialExtension)
{
  auto b = s3_brace();
  auto bf = beta_machinery(trivial_extension(b, left_translation(b.circ())));
  EXPECT_TRUE(bf.report.all_passed());
  for (Elem x = 0; x < 6; ++x)
    for (Elem a = 0; a < 6; ++a) {
      EXPECT_EQ(bf.beta_at(x, a), a);
      for (Elem c = 0; c < 6; ++c)
        EXPECT_EQ(bf.dot_at(x, a, c), b.dot().mul(a, c));
    }
}

TEST(BetaMachinery, StandardAction)
{
  for (auto const &b : all_braces_up_to(6)) {
    auto const &d = b.dot();
    auto bf = beta_machinery(standard_action(b));
    EXPECT_TRUE(bf.report.all_passed());
    for (Elem x = 0; x < b.order(); ++x)
      for (Elem a = 0; a < b.order(); ++a) {
        Elem alpha = d.mul(d.mul(d.inv(x), a), x);
        EXPECT_EQ(bf.beta_at(x, a), d.mul(a, d.inv(alpha)));
      }
  }
}

TEST(BetaMachinery, IdentityPiOnAbelianDot)
{
  for (auto const &b : all_braces_up_to(8)) {
    if (!b.is_brace())
      continue;
    auto pt = make_brace_action(b, trivial_action(b.circ(), 1), {identity_endo(b.order())});
    auto bf = beta_machinery(pt);
    EXPECT_TRUE(bf.report.all_passed());
    for (Elem a = 0; a < b.order(); ++a) {
      EXPECT_EQ(bf.beta_at(0, a), b.unit());
      // a ._x c = a . c . a^-1 = c when the dot is commutative.
      for (Elem c = 0; c < b.order(); ++c)
        EXPECT_EQ(bf.dot_at(0, a, c), c);
    }
  }
}
