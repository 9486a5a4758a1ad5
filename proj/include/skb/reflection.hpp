#ifndef SKB_REFLECTION_HPP
#define SKB_REFLECTION_HPP

#include <vector>

#include "skb/brace_action.hpp"
#include "skb/braiding.hpp"
#include "skb/report.hpp"

namespace skb
{

/// k: A x X -> A x X, a PairMap with p = |A| and q = |X|.
using ReflectionMap = PairMap;

/// Least (a, b, x) where the reflection equation
///   (r x id)(id x k)(r x id)(id x k) = (id x k)(r x id)(id x k)(r x id)
/// fails, if any.
std::optional<Witness> reflection_violation(PairMap const &r, ReflectionMap const &k);

/// r.Bijective and r.BraidRelation (the precondition), EqRE, and KBijective
/// as an informational entry.
Report check_reflection_equation(PairMap const &r, ReflectionMap const &k);

enum class Classification
{
  braided,
  generalized_braided,
  neither
};

std::string_view to_string(Classification c);

struct BraidedActionReport
{
  Report report;
  Classification classification = Classification::neither;

  bool braided() const { return classification == Classification::braided; }
  bool generalized() const { return classification != Classification::neither; }
};

/// Checks, with witnesses:
///   EqBraid2  (a, b, x): k(a o b, x) = (m x id)(id x k)(r x id)(id x k)(a, b, x)
///   EqBraidk1 (a, b, x): k(a, b o x) = (id x m)(r x id)(id x k)(r x id)(a, b, x)
///   EqUnitk   (x):       k(e, x) = (e, x)
///   EqTrivmXk (a, x):    a' o x' = a o x where (a', x') = k(a, x)
///   EqRE      (a, b, x)
/// and the flag BraidedImpliesRE. Braided means the first four hold;
/// generalized braided means EqBraid2, EqBraidk1, EqUnitk and EqRE hold.
BraidedActionReport check_braided_action(BraidingOperator const &r,
                                         GroupAction const &act,
                                         ReflectionMap const &k);

/// k(a, x) = (u, u' o a o x) with u = pi_{a o x}(a). Throws InvalidAction for
/// an invalid action and InternalAxiomViolation if the result is not braided.
ReflectionMap k_from_action(BraceAction const &act);

/// pi_x(a) = first(k(a, a' o x)). Throws NotBraided unless (act, k) is a
/// braided action for braiding_from_brace(b).
BraceAction action_from_k(SkewBrace const &b, GroupAction const &act,
                          ReflectionMap const &k);

struct KSquared
{
  GroupAction act;  // left o-translation
  ReflectionMap k;  // r . r
};

KSquared k_squared(BraidingOperator const &r);

/// beta_x(a) = a . pi_x(a)^-1 and a ._x b = a . b . a^-1 . beta_x(a), with
/// the checks
///   EqDefPiforBet   (x, a):       pi_x(a) = beta_x(a)^-1 . a
///   EqDefrhox       (x, a, b):    a ._x b = b o beta_{b' o x}(rho_{b'}(a))
///   EqActProprhox   (x, a, b, c): (a . b) ._x c = a ._x (b ._x c), e ._x c = c
///   EqCompdotxcirc  (x, a, b, c): b o (a ._x c) = rho_b(a) ._{b o x} (b o c)
///   EqIdProdBet     (x, a, b):    beta_x(a . b) = a . beta_x(b) . a^-1 . beta_x(a)
///   EqCondCommBraid (x, a, b, c): a ._x (b . c) = a . b . a^-1 . (a ._x c)
struct BetaFamily
{
  Elem n = 0;
  Elem m = 0;
  std::vector<Elem> beta;  // beta[x * n + a]
  std::vector<Elem> dotx;  // dotx[(x * n + a) * n + b]
  Report report;

  Elem beta_at(Elem x, Elem a) const { return beta[x * n + a]; }
  Elem dot_at(Elem x, Elem a, Elem b) const { return dotx[(x * n + a) * n + b]; }
};

/// Throws InvalidAction for an invalid action.
BetaFamily beta_machinery(BraceAction const &act);

} // namespace skb

#endif // SKB_REFLECTION_HPP
