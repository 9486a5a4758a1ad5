#ifndef SKB_SKEW_BRACE_HPP
#define SKB_SKEW_BRACE_HPP

#include <optional>
#include <vector>

#include "skb/group.hpp"

namespace skb
{

/// Two group structures on one carrier satisfying
///   a o (b . c) = (a o b) . a^-1 . (a o c)
/// with a^-1 the dot-inverse. The circ-inverse is circ().inv(a).
class SkewBrace
{
public:
  FiniteGroup const &circ() const { return _circ; }
  FiniteGroup const &dot() const { return _dot; }
  Elem order() const { return _circ.order(); }
  Elem unit() const { return _circ.unit(); }

  Elem lambda(Elem a, Elem b) const
  {
    return _dot.mul(_dot.inv(a), _circ.mul(a, b));
  }
  Elem rho(Elem a, Elem b) const
  {
    return _dot.mul(_circ.mul(a, b), _dot.inv(a));
  }
  /// alpha_a(b) = a^-1 . b . a
  Elem alpha(Elem a, Elem b) const
  {
    return _dot.mul(_dot.mul(_dot.inv(a), b), a);
  }

  bool is_brace() const { return _dot.is_abelian(); }

  bool operator==(SkewBrace const &) const = default;

private:
  friend SkewBrace validate_skew_brace(FiniteGroup circ, FiniteGroup dot);

  SkewBrace(FiniteGroup circ, FiniteGroup dot)
  : _circ(std::move(circ)), _dot(std::move(dot))
  {}

  FiniteGroup _circ;
  FiniteGroup _dot;
};

/// Throws OrderMismatch, UnitMismatch or DistributivityFailed(a,b,c).
SkewBrace validate_skew_brace(FiniteGroup circ, FiniteGroup dot);

/// Tabulated lambda/rho maps, verified to be actions by dot-automorphisms.
struct LambdaRho
{
  Elem n = 0;
  std::vector<Elem> lambda;  // lambda[a * n + b] = lambda_a(b)
  std::vector<Elem> rho;

  Endo lambda_map(Elem a) const;
  Endo rho_map(Elem a) const;
};

/// Throws InternalLemmaViolation if the tabulated maps are not actions by
/// automorphisms (cannot happen for a validated brace).
LambdaRho lambda_rho(SkewBrace const &b);

SkewBrace trivial_brace(FiniteGroup const &g);
SkewBrace opposite_brace(SkewBrace const &b);

/// The skew brace on S3 (dot) with circ cyclic of order 6, generated by (12).
SkewBrace s3_brace();

struct EnumerationOptions
{
  Elem max_order = 8;
};

/// Every circ table on the carrier of `dot` (same unit) for which
/// (A, circ, dot) is a skew brace, sorted lexicographically by circ table.
///
/// Depth-first search over the rows of the circ table. Row a is restricted
/// to b -> a . phi(b) with phi a dot-automorphism (row-local form of the
/// distributivity law); column Latin constraints and associativity, in the
/// form lambda_{a o b} = lambda_a lambda_b, are checked and propagated as
/// soon as the rows involved exist. Throws OrderTooLarge.
std::vector<SkewBrace> enumerate_skew_braces(FiniteGroup const &dot,
                                             EnumerationOptions const &opts = {});

/// Carrier bijection that is simultaneously a circ- and dot-isomorphism.
/// Brute force, intended for n <= 8.
std::optional<std::vector<Elem>> find_brace_isomorphism(SkewBrace const &lhs,
                                                        SkewBrace const &rhs);

/// Indices of one representative per isomorphism class, for braces sharing
/// the same dot table (isomorphisms are then dot-automorphisms).
std::vector<std::size_t>
isomorphism_class_representatives(std::vector<SkewBrace> const &braces);

} // namespace skb

#endif // SKB_SKEW_BRACE_HPP
