#ifndef SKB_BRAIDING_HPP
#define SKB_BRAIDING_HPP

#include <span>
#include <utility>
#include <vector>

#include "skb/group.hpp"
#include "skb/report.hpp"
#include "skb/skew_brace.hpp"

namespace skb
{

using Pair = std::pair<Elem, Elem>;

/// A total map {0..p-1} x {0..q-1} -> {0..p-1} x {0..q-1}, stored row-major
/// (entry a * q + b is the image of (a, b)).
class PairMap
{
public:
  /// Throws OutOfRange if the table has the wrong length or an image is
  /// outside the box.
  PairMap(Elem p, Elem q, std::vector<Pair> table);

  static PairMap identity(Elem p, Elem q);
  static PairMap flip(Elem n);

  Elem p() const { return _p; }
  Elem q() const { return _q; }
  Pair operator()(Elem a, Elem b) const { return _table[a * _q + b]; }
  std::vector<Pair> const &table() const { return _table; }

  /// Least (a, b) whose image was already hit by a smaller argument, if any.
  std::optional<Witness> injectivity_violation() const;
  bool is_bijective() const { return !injectivity_violation(); }

  bool operator==(PairMap const &) const = default;

private:
  Elem _p;
  Elem _q;
  std::vector<Pair> _table;
};

/// (f . g)(a, b) = f(g(a, b)). Sizes must agree.
PairMap compose(PairMap const &f, PairMap const &g);

/// r(a, b) = (a |> b, a <| b) on a group (A, o), satisfying the braiding
/// axioms. Only produced by validate_braiding() and braiding_from_brace().
class BraidingOperator
{
public:
  FiniteGroup const &circ() const { return _circ; }
  Elem order() const { return _circ.order(); }

  Elem rhd(Elem a, Elem b) const { return _rhd[a * order() + b]; }
  Elem lhd(Elem a, Elem b) const { return _lhd[a * order() + b]; }
  Pair operator()(Elem a, Elem b) const { return {rhd(a, b), lhd(a, b)}; }

  std::span<Elem const> rhd_table() const { return _rhd; }
  std::span<Elem const> lhd_table() const { return _lhd; }
  PairMap as_pair_map() const;

  bool operator==(BraidingOperator const &) const = default;

private:
  friend BraidingOperator validate_braiding(FiniteGroup circ, std::vector<Elem> rhd,
                                            std::vector<Elem> lhd);
  friend BraidingOperator braiding_from_brace(SkewBrace const &b);

  BraidingOperator(FiniteGroup circ, std::vector<Elem> rhd, std::vector<Elem> lhd)
  : _circ(std::move(circ)), _rhd(std::move(rhd)), _lhd(std::move(lhd))
  {}

  FiniteGroup _circ;
  std::vector<Elem> _rhd;
  std::vector<Elem> _lhd;
};

/// Checks EqBraid1, EqBraidr2, EqBraidUnit, EqBraidCom and Invertible on
/// flat n*n tables. Throws OutOfRange for malformed tables only.
///
///   EqBraid1:    r(a o b, c) = (id x m)(r x id)(id x r)(a, b, c)
///   EqBraidr2:   r(a, b o c) = (m x id)(id x r)(r x id)(a, b, c)
///   EqBraidUnit: r(a, e) = (e, a) and r(e, a) = (a, e)
///   EqBraidCom:  (a |> b) o (a <| b) = a o b
Report check_braiding_axioms(FiniteGroup const &circ, std::span<Elem const> rhd,
                             std::span<Elem const> lhd);

/// Throws AxiomsFailed (witness of the first failing axiom) unless every
/// axiom of check_braiding_axioms holds.
BraidingOperator validate_braiding(FiniteGroup circ, std::vector<Elem> rhd,
                                   std::vector<Elem> lhd);

/// a |> b = lambda_a(b), a <| b = inverse of rho_{b'}(a') (primes: circ-inverse).
BraidingOperator braiding_from_brace(SkewBrace const &b);

/// The dot product a . b = a o (a' |> b). Throws ResultNotBrace if the result
/// fails validation (impossible for a genuine braiding operator).
SkewBrace brace_from_braiding(BraidingOperator const &r);

/// Bijective, BraidRelation on (x, y, z) and, when `qybe` is set, QYBE for
/// R(x, y) = r(y, x):
///   (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r)
///   R12 R13 R23 = R23 R13 R12
Report check_braid_relation(PairMap const &r, bool qybe = false);

/// A x A with (a1, a2)(b1, b2) = (a1 o (a2 |> b1), (a2 <| b1) o b2), encoded
/// as a * n + b.
struct TwistedProductGroup
{
  FiniteGroup group;
  Elem base_order = 0;
  std::vector<Elem> j1;    // a -> (a, e)
  std::vector<Elem> iota;  // a -> (a, a')

  Elem encode(Elem a, Elem b) const { return a * base_order + b; }
  Pair decode(Elem t) const { return {t / base_order, t % base_order}; }
};

/// Builds the twisted product and verifies: multiplication (a, b) -> a o b is
/// a homomorphism with kernel iota(A); iota(a) iota(b) = iota(a . b); j1 is an
/// embedding; the inverse formula; j1(b) iota(a) = iota(rho_b(a)) j1(b); and
/// (a, b) = j1(a o b) iota(b'). Throws OrderTooLarge if n^2 > max_order,
/// InternalInvariantViolation if a check fails.
TwistedProductGroup twisted_product(SkewBrace const &b, Elem max_order = 4096);

} // namespace skb

#endif // SKB_BRAIDING_HPP
