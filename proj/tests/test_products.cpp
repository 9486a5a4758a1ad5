#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skb/catalog.hpp"
#include "skb/products.hpp"

using namespace skb;

namespace
{

struct Base
{
  BraidingOperator r;
  BraceAction act;
  ReflectionMap k;
};

Base s3_standard()
{
  auto b = s3_brace();
  auto a = standard_action(b);
  return {braiding_from_brace(b), a, k_from_action(a)};
}

Base s3_trivial_extension()
{
  auto b = s3_brace();
  auto a = trivial_extension(b, left_translation(b.circ()));
  return {braiding_from_brace(b), a, k_from_action(a)};
}

bool re_holds(PairMap const &r, PairMap const &k)
{
  auto [lhs, rhs] = oracle::reflection_sides(r, k);
  return lhs == rhs;
}

} // namespace

TEST(BuildProducts, FlipOnOnePoint)
{
  auto b = trivial_brace(catalog::cyclic(3));
  auto r = braiding_from_brace(b);
  auto pt = trivial_action(b.circ(), 1);
  auto p = build_products(r, pt, PairMap::identity(3, 1));
  auto lt = left_translation(b.circ());
  EXPECT_EQ(p.y_size, 3u);
  EXPECT_EQ(p.m_triv.flat_table().size(), lt.flat_table().size());
  EXPECT_TRUE(std::equal(lt.flat_table().begin(), lt.flat_table().end(), p.m_triv.flat_table().begin()));
  EXPECT_TRUE(std::equal(lt.flat_table().begin(), lt.flat_table().end(), p.m_k.flat_table().begin()));
  // The flip hands b through unchanged and a acts on the single point, so
  // the r-twisted amplification is the trivial action on A.
  EXPECT_EQ(p.m_r, trivial_action(b.circ(), 3));
  EXPECT_EQ(p.k_y, PairMap::identity(3, 3));
}

TEST(BuildProducts, S3StandardAction)
{
  auto base = s3_standard();
  auto p = build_products(base.r, base.act.circ_act, base.k);
  EXPECT_EQ(p.y_size, 36u);
  for (auto const *rep : {&p.triv_report, &p.k_report, &p.r_report}) {
    EXPECT_TRUE(rep->generalized());
    // EqTrivmXk does not survive the product constructions on this brace.
    EXPECT_FALSE(rep->braided());
    EXPECT_FALSE(rep->report.passed("EqTrivmXk"));
  }
  EXPECT_TRUE(re_holds(base.r.as_pair_map(), p.k_y));

  // k_Y = (r x id)(id x k)(r x id), recomputed.
  for (Elem a = 0; a < 6; ++a)
    for (Elem y = 0; y < 36; ++y) {
      auto [bb, x] = p.decode(y);
      auto [a1, b1] = base.r(a, bb);
      auto [b2, x2] = base.k(b1, x);
      auto [a3, b3] = base.r(a1, b2);
      EXPECT_EQ(p.k_y(a, y), Pair(a3, p.encode(b3, x2)));
      // m_triv and m_r by their closed forms.
      EXPECT_EQ(p.m_triv.act(a, y), p.encode(base.r.circ().mul(a, bb), x));
      EXPECT_EQ(p.m_r.act(a, y), p.encode(a1, base.act.circ_act.act(b1, x)));
      EXPECT_EQ(p.m_k.act(a, y), p.encode(base.r.circ().mul(a1, b2), x2));
    }
}

TEST(BuildProducts, TrivialExtensionMkEqualsMr)
{
  // With k(a, x) = (e, a o x) the k-twisted extension reduces to the
  // r-twisted amplification: (a, (b, x)) -> (a |> b, (a <| b) o x).
  auto base = s3_trivial_extension();
  auto p = build_products(base.r, base.act.circ_act, base.k);
  EXPECT_EQ(p.m_k, p.m_r);
}

TEST(BuildProducts, Errors)
{
  auto b = trivial_brace(catalog::symmetric3());
  auto r = braiding_from_brace(b);
  try {
    build_products(r, left_translation(b.circ()), PairMap::identity(6, 6));
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::NotGeneralizedBraided);
  }
  auto base = s3_standard();
  EXPECT_THROW(build_products(base.r, base.act.circ_act, base.k, 35), ValidationError);
}

TEST(BraidCommute, PropositionPairs)
{
  auto base = s3_standard();
  auto p = build_products(base.r, base.act.circ_act, base.k);
  EXPECT_TRUE(check_braid_commute(p.r, p.m_k, p.m_triv).all_passed());
  EXPECT_TRUE(check_braid_commute(p.r, p.m_k, p.m_r).all_passed());
  EXPECT_TRUE(check_braid_commute(p.r, p.m_r, p.m_triv).all_passed());
  // The relation is ordered; r is not involutive here.
  EXPECT_FALSE(check_braid_commute(p.r, p.m_triv, p.m_k).all_passed());
  EXPECT_FALSE(check_braid_commute(p.r, p.m_k, p.m_triv).find("Reverse")->passed);
}

TEST(BraidCommute, FlipWithCommutingActions)
{
  auto b = trivial_brace(catalog::cyclic(4));
  auto r = braiding_from_brace(b);
  auto lt = left_translation(b.circ());
  auto triv = trivial_action(b.circ(), 4);
  auto rep = check_braid_commute(r, lt, triv);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_TRUE(rep.find("Reverse")->passed);
}

TEST(Theta, FlipGivesDirectProduct)
{
  auto b = trivial_brace(catalog::cyclic(3));
  auto r = braiding_from_brace(b);
  auto lt = left_translation(b.circ());
  auto triv = trivial_action(b.circ(), 3);
  auto t = theta_from_pair(r, lt, triv);
  EXPECT_EQ(t.product.group, catalog::direct_product(b.circ(), b.circ()));
  for (Elem a = 0; a < 3; ++a)
    for (Elem c = 0; c < 3; ++c)
      for (Elem y = 0; y < 3; ++y)
        EXPECT_EQ(t.theta.act(t.product.encode(a, c), y), lt.act(c, y));
}

TEST(Theta, S3BundleAndFibers)
{
  auto base = s3_standard();
  auto p = build_products(base.r, base.act.circ_act, base.k);
  auto t = theta_from_pair(p.r, p.m_k, p.m_triv);
  EXPECT_EQ(t.theta.set_size(), 36u);
  auto [mY, mY2] = split_theta(t, p.r.circ());
  EXPECT_EQ(mY, p.m_k);
  EXPECT_EQ(mY2, p.m_triv);
  EXPECT_FALSE(iota_fiber_violation(t, base.act.circ_act));

  try {
    theta_from_pair(p.r, p.m_triv, p.m_k);
    FAIL();
  }
  catch (ValidationError const &e) {
    EXPECT_EQ(e.code(), Errc::NotBraidCommuting);
  }
}

TEST(Products, MxEquivarianceForBraidedBase)
{
  for (auto const &base : {s3_standard(), s3_trivial_extension()}) {
    auto p = build_products(base.r, base.act.circ_act, base.k);
    EXPECT_FALSE(mx_equivariance_violation(p));
  }
}

TEST(Products, CorrespondenceRoundTrip)
{
  auto base = s3_standard();
  auto p = build_products(base.r, base.act.circ_act, base.k);
  ASSERT_TRUE(check_braid_commute(p.r, p.m_k, p.m_triv).all_passed());
  ASSERT_TRUE(check_braid_commute(p.r, p.m_k, p.m_r).all_passed());
  auto k = k_from_product_action(p.m_k, base.act.set_size());
  EXPECT_EQ(k, base.k);
  EXPECT_EQ(build_products(base.r, base.act.circ_act, k).m_k, p.m_k);
}

TEST(Amplification, DepthZeroAndFlip)
{
  auto base = s3_standard();
  auto lv = iterate_amplification(base.r, base.act.circ_act, base.k, 0);
  ASSERT_EQ(lv.size(), 1u);
  EXPECT_EQ(lv[0].k, base.k);

  auto b = trivial_brace(catalog::cyclic(2));
  auto r = braiding_from_brace(b);
  auto flip_levels =
      iterate_amplification(r, trivial_action(b.circ(), 1), PairMap::identity(2, 1), 2);
  ASSERT_EQ(flip_levels.size(), 3u);
  EXPECT_EQ(flip_levels[2].k, PairMap::identity(2, 4));
}

TEST(Amplification, S3TrivialExtensionDepthOne)
{
  auto base = s3_trivial_extension();
  auto lv = iterate_amplification(base.r, base.act.circ_act, base.k, 1);
  ASSERT_EQ(lv.size(), 2u);
  EXPECT_EQ(lv[1].act.set_size(), 36u);
  EXPECT_TRUE(lv[1].re.all_passed());
  EXPECT_TRUE(re_holds(base.r.as_pair_map(), lv[1].k));
}

TEST(Amplification, CarriedActions)
{
  auto base = s3_standard();
  for (auto carry : {CarriedAction::k, CarriedAction::triv, CarriedAction::r}) {
    auto lv = iterate_amplification(base.r, base.act.circ_act, base.k, 1, carry);
    ASSERT_EQ(lv.size(), 2u);
    EXPECT_TRUE(lv[1].re.all_passed());
  }
  EXPECT_THROW(iterate_amplification(base.r, base.act.circ_act, base.k, 2, CarriedAction::k, 100),
               ValidationError);
}
