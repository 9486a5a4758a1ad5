#ifndef SKB_PRODUCTS_HPP
#define SKB_PRODUCTS_HPP

#include <utility>
#include <vector>

#include "skb/braiding.hpp"
#include "skb/reflection.hpp"

namespace skb
{

/// Actions of (A, o) on Y = A x X, with (b, x) encoded as b * |X| + x:
///   k_Y    = (r x id)(id x k)(r x id)
///   m_triv = m_A x id                   a.(b, x) = (a o b, x)
///   m_k    = (m_A x id)(id x k)(r x id)
///   m_r    = (id x m_X)(r x id)         a.(b, x) = (a |> b, (a <| b) o x)
struct ProductActionBundle
{
  BraidingOperator r;
  GroupAction base_act;
  ReflectionMap base_k;

  Elem y_size = 0;
  ReflectionMap k_y;
  GroupAction m_triv;
  GroupAction m_k;
  GroupAction m_r;

  BraidedActionReport triv_report;
  BraidedActionReport k_report;
  BraidedActionReport r_report;

  Elem encode(Elem b, Elem x) const { return b * base_act.set_size() + x; }
  Pair decode(Elem y) const
  {
    return {y / base_act.set_size(), y % base_act.set_size()};
  }
};

/// Throws NotGeneralizedBraided if (act, k) is not generalized braided for r,
/// OrderTooLarge if |A| * |X| > max_y, and InternalInvariantViolation if one
/// of the product structures fails to be an action or generalized braided.
ProductActionBundle build_products(BraidingOperator const &r, GroupAction const &act,
                                   ReflectionMap const &k, Elem max_y = 4096);

/// EqCommBraid1 on (a, b, y):
///   mY(a, mY2(b, y)) = mY2(a |> b, mY(a <| b, y))
/// and, as an informational entry, the same with the roles swapped (Reverse).
Report check_braid_commute(BraidingOperator const &r, GroupAction const &mY,
                           GroupAction const &mY2);

struct ThetaAction
{
  TwistedProductGroup product;
  GroupAction theta;  // theta((a, b), y) = mY2(a, mY(b, y))
};

/// Throws NotBraidCommuting unless check_braid_commute(r, mY, mY2) passes.
ThetaAction theta_from_pair(BraidingOperator const &r, GroupAction const &mY,
                            GroupAction const &mY2);

/// (mY, mY2) with mY(b, y) = theta((e, b), y) and mY2(a, y) = theta((a, e), y).
std::pair<GroupAction, GroupAction> split_theta(ThetaAction const &t,
                                                FiniteGroup const &circ);

/// Least (a, y) with m_X(theta(iota(a), y)) != m_X(y), where
/// m_X(b, x) = b o x and Y = A x X for the given base action.
std::optional<Witness> iota_fiber_violation(ThetaAction const &t,
                                            GroupAction const &base_act);

/// Least (a, b, x) with m_X(m_k(a, (b, x))) != a o (b o x).
std::optional<Witness> mx_equivariance_violation(ProductActionBundle const &p);

/// k(a, x) = mY(a, (e, x)) for an action mY on A x X with |X| = m.
ReflectionMap k_from_product_action(GroupAction const &mY, Elem m);

enum class CarriedAction
{
  k,
  triv,
  r
};

struct AmplificationLevel
{
  GroupAction act;
  ReflectionMap k;
  Report re;  // check_reflection_equation(r, k)
};

/// Level 0 is the base; level i + 1 lives on A x (level i set) with k_Y and
/// the chosen product action. Throws OrderTooLarge if a level exceeds max_y.
std::vector<AmplificationLevel> iterate_amplification(BraidingOperator const &r,
                                                      GroupAction const &act,
                                                      ReflectionMap const &k,
                                                      unsigned depth,
                                                      CarriedAction carry = CarriedAction::k,
                                                      Elem max_y = 4096);

} // namespace skb

#endif // SKB_PRODUCTS_HPP
