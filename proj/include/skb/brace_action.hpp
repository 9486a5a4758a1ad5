#ifndef SKB_BRACE_ACTION_HPP
#define SKB_BRACE_ACTION_HPP

#include <vector>

#include "skb/group.hpp"
#include "skb/report.hpp"
#include "skb/skew_brace.hpp"

namespace skb
{

/// An (A, o)-set X together with pi: X -> End(A, .) satisfying
/// pi_{a o x} = a <> pi_x.
struct BraceAction
{
  SkewBrace brace;
  GroupAction circ_act;
  std::vector<Endo> pi;

  Elem set_size() const { return circ_act.set_size(); }
  Elem pi_at(Elem x, Elem a) const { return pi[x](a); }

  bool operator==(BraceAction const &) const = default;
};

/// a <> chi = lambda_a . chi . rho_a^-1. Throws NotEndomorphism if chi is not
/// a dot-endomorphism.
Endo diamond(SkewBrace const &b, Elem a, Endo const &chi);

/// Checks on (act, pi):
///   Endomorphism    (x, a, b):  pi_x(a . b) = pi_x(a) . pi_x(b)
///   Equivariance    (a, x, b):  pi_{a o x}(b) = (a <> pi_x)(b)
///   TwistedCocycle  (x, a, b):  pi_x(a o b) = lambda_a(pi_{a' o x}(b)) . pi_x(a)
///   PropEquivalence:            (Endo and Cocycle) iff (Endo and Equivariance)
/// Throws OrderMismatch / OutOfRange for tables of the wrong shape.
Report validate_brace_action(SkewBrace const &b, GroupAction const &act,
                             std::vector<Endo> const &pi);

/// Throws InvalidAction (first failing check) unless validate_brace_action
/// passes.
BraceAction make_brace_action(SkewBrace b, GroupAction act, std::vector<Endo> pi);

/// X = End(A, .) in lexicographic order, a.chi = a <> chi, pi = id.
BraceAction universal_action(SkewBrace const &b);

/// X = A under left o-translation, pi_a(b) = a^-1 . b . a.
BraceAction standard_action(SkewBrace const &b);

/// pi_x = constant unit map for every x.
BraceAction trivial_extension(SkewBrace const &b, GroupAction const &act);

/// X = left cosets a o S of a o-subgroup S (indexed by increasing least
/// representative), pi_{a o S} = a <> chi. Requires
///   chi(s o a) = lambda_s(chi(a)) . chi(s)   for s in S, a in A.
/// Throws NotSubgroup, NotEndomorphism or CocycleFailed(s, a).
BraceAction irreducible_action(SkewBrace const &b, std::vector<Elem> const &subgroup,
                               Endo const &chi);

/// pi_x(a) = c_x^-1 . a . c_x for an equivariant c: X -> A.
/// Throws NotEquivariant(a, x).
BraceAction inner_action(SkewBrace const &b, GroupAction const &act,
                         std::vector<Elem> const &c);

/// Endomorphisms fixed by every a <>, computed both as diamond fixed points
/// and as maps with chi . rho_a = lambda_a . chi; the two lists are compared.
std::vector<Endo> fixed_endomorphisms(SkewBrace const &b);

} // namespace skb

#endif // SKB_BRACE_ACTION_HPP
