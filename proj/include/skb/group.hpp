#ifndef SKB_GROUP_HPP
#define SKB_GROUP_HPP

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "skb/error.hpp"

namespace skb
{

using Table = std::vector<std::vector<Elem>>;

/// A finite group given by its Cayley table on the index set 0..n-1.
///
/// Instances are only produced by validate_group() (and the constructions
/// built on it), so every FiniteGroup satisfies the group axioms. The unit is
/// stored explicitly and need not be 0.
class FiniteGroup
{
public:
  Elem order() const { return _n; }
  Elem unit() const { return _unit; }
  Elem mul(Elem a, Elem b) const { return _mul[a * _n + b]; }
  Elem inv(Elem a) const { return _inv[a]; }

  std::span<Elem const> flat_table() const { return _mul; }
  Table rows() const;

  bool is_abelian() const;
  FiniteGroup opposite() const;

  bool operator==(FiniteGroup const &) const = default;

private:
  friend FiniteGroup validate_group(Elem n, std::vector<Elem> flat, Elem unit);

  FiniteGroup(Elem n, Elem unit, std::vector<Elem> mul, std::vector<Elem> inv)
  : _n(n), _unit(unit), _mul(std::move(mul)), _inv(std::move(inv))
  {}

  Elem _n;
  Elem _unit;
  std::vector<Elem> _mul;
  std::vector<Elem> _inv;
};

/// Checks range, unit, Latin property, two-sided inverses and associativity
/// (in that order) and throws ValidationError naming the first violation.
FiniteGroup validate_group(Table const &mul, Elem unit);
FiniteGroup validate_group(Elem n, std::vector<Elem> flat, Elem unit);

Elem element_order(FiniteGroup const &g, Elem a);

/// A self-map of the carrier of some group, map[a] = image of a.
struct Endo
{
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  Elem size() const { return static_cast<Elem>(map.size()); }

  auto operator<=>(Endo const &) const = default;
};

Endo identity_endo(Elem n);
Endo constant_endo(FiniteGroup const &g);

/// (f . g)(a) = f(g(a)).
Endo compose(Endo const &f, Endo const &g);
std::optional<Endo> invert(Endo const &f);

/// Least (a, b) with f(a*b) != f(a)*f(b), if any.
std::optional<Witness> endomorphism_violation(FiniteGroup const &g, Endo const &f);
bool is_endomorphism(FiniteGroup const &g, Endo const &f);

/// All endomorphisms (or automorphisms) of g, lexicographically sorted.
std::vector<Endo> endomorphism_monoid(FiniteGroup const &g,
                                      bool automorphisms_only = false);

namespace detail
{
// Backtracking filter over all n^n maps; used for n <= 8.
std::vector<Endo> endomorphisms_by_filter(FiniteGroup const &g);
// Extension of images of a generating set; used above 8.
std::vector<Endo> endomorphisms_by_generators(FiniteGroup const &g);
} // namespace detail

/// Greedy generating set: repeatedly adds the least element not yet generated.
std::vector<Elem> generating_set(FiniteGroup const &g);

enum class Conjugation
{
  mu,    // t -> s t s^-1
  alpha  // t -> s^-1 t s
};

Endo conjugation_endo(FiniteGroup const &g, Elem s,
                      Conjugation convention = Conjugation::mu);

/// A left action of a finite group on {0..m-1}, act(a, x) = a.x.
class GroupAction
{
public:
  FiniteGroup const &group() const { return _group; }
  Elem set_size() const { return _m; }
  Elem act(Elem a, Elem x) const { return _act[a * _m + x]; }
  std::span<Elem const> flat_table() const { return _act; }
  Table rows() const;

  bool operator==(GroupAction const &) const = default;

private:
  friend GroupAction validate_action(FiniteGroup const &g, Elem set_size,
                                     std::vector<Elem> flat);

  GroupAction(FiniteGroup g, Elem m, std::vector<Elem> act)
  : _group(std::move(g)), _m(m), _act(std::move(act))
  {}

  FiniteGroup _group;
  Elem _m;
  std::vector<Elem> _act;
};

GroupAction validate_action(FiniteGroup const &g, Elem set_size, Table const &act);
GroupAction validate_action(FiniteGroup const &g, Elem set_size,
                            std::vector<Elem> flat);

GroupAction left_translation(FiniteGroup const &g);
GroupAction trivial_action(FiniteGroup const &g, Elem set_size);

/// Orbits as sorted index lists, ordered by (size, least element).
std::vector<std::vector<Elem>> orbits(GroupAction const &act);
std::vector<Elem> stabilizer(GroupAction const &act, Elem x);

/// Brute-force isomorphism search (unit to unit), intended for n <= 8.
/// Returns phi with phi(a*b) = phi(a)*phi(b).
std::optional<std::vector<Elem>> find_group_isomorphism(FiniteGroup const &g,
                                                        FiniteGroup const &h);

/// Equivariant bijection between two transitive actions of the same group,
/// restricted to `orbit` on the left side. Entry i of the result is the
/// image of orbit[i]; the map satisfies f(a.x) = a.f(x).
std::optional<std::vector<Elem>>
find_equivariant_bijection(GroupAction const &lhs, std::vector<Elem> const &orbit,
                           GroupAction const &rhs);

} // namespace skb

#endif // SKB_GROUP_HPP
