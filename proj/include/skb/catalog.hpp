#ifndef SKB_CATALOG_HPP
#define SKB_CATALOG_HPP

#include <string>
#include <vector>

#include "skb/group.hpp"

namespace skb::catalog
{

FiniteGroup cyclic(Elem n);
FiniteGroup klein_four();
FiniteGroup elementary_abelian_2(Elem rank);
FiniteGroup dihedral(Elem k);  // order 2k
FiniteGroup quaternion8();

/// (g, h) is encoded as g * |H| + h.
FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h);

/// Group of the given permutations of {0..d-1} under composition, where
/// (p q)(i) = p(q(i)). The list must be closed and contain the identity.
FiniteGroup permutation_group(std::vector<std::vector<Elem>> const &perms);

/// S3 with 0=id, 1=(12), 2=(23), 3=(31), 4=(123), 5=(132).
FiniteGroup symmetric3();

struct NamedGroup
{
  std::string name;
  FiniteGroup group;
};

/// One representative of every isomorphism class of order n, 1 <= n <= 8.
std::vector<NamedGroup> groups_of_order(Elem n);

/// Lookup by the names used in groups_of_order() ("Z6", "S3", "Z2xZ2", ...).
FiniteGroup by_name(std::string const &name);

} // namespace skb::catalog

#endif // SKB_CATALOG_HPP
