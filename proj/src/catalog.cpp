#include "skb/catalog.hpp"

#include <algorithm>
#include <map>

namespace skb::catalog
{

FiniteGroup cyclic(Elem n)
{
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[a * n + b] = (a + b) % n;
  return validate_group(n, std::move(t), 0);
}

FiniteGroup elementary_abelian_2(Elem rank)
{
  Elem n = Elem{1} << rank;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[a * n + b] = a ^ b;
  return validate_group(n, std::move(t), 0);
}

FiniteGroup klein_four() { return elementary_abelian_2(2); }

FiniteGroup dihedral(Elem k)
{
  // r^i s^j  ->  i + k j
  Elem n = 2 * k;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem i = x % k, a = x / k, j = y % k, b = y / k;
      Elem rot = a == 0 ? (i + j) % k : (i + k - j) % k;
      t[x * n + y] = rot + k * ((a + b) % 2);
    }
  return validate_group(n, std::move(t), 0);
}

FiniteGroup quaternion8()
{
  // 0=1 1=-1 2=i 3=-i 4=j 5=-j 6=k 7=-k
  // basis products: unit index u in {0:1,1:i,2:j,3:k}, with sign
  static int const prod[4][4][2] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
    {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  std::vector<Elem> t(64);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      Elem bx = x / 2, by = y / 2;
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * prod[bx][by][1];
      t[x * 8 + y] = static_cast<Elem>(2 * prod[bx][by][0] + (sign < 0 ? 1 : 0));
    }
  return validate_group(8, std::move(t), 0);
}

FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h)
{
  Elem ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      t[x * n + y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
  return validate_group(n, std::move(t), g.unit() * nh + h.unit());
}

FiniteGroup permutation_group(std::vector<std::vector<Elem>> const &perms)
{
  auto n = static_cast<Elem>(perms.size());
  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < n; ++i)
    index.emplace(perms[i], i);

  Elem unit = n;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a) {
    auto const &p = perms[a];
    if (std::is_sorted(p.begin(), p.end()) &&
        std::adjacent_find(p.begin(), p.end()) == p.end() && p.front() == 0)
      unit = a;
    for (Elem b = 0; b < n; ++b) {
      auto const &q = perms[b];
      std::vector<Elem> pq(q.size());
      for (std::size_t i = 0; i < q.size(); ++i)
        pq[i] = p[q[i]];
      auto it = index.find(pq);
      if (it == index.end())
        throw ValidationError(Errc::OutOfRange, "permutation list not closed", {a, b});
      t[a * n + b] = it->second;
    }
  }
  return validate_group(n, std::move(t), unit);
}

FiniteGroup symmetric3()
{
  // images of points 1,2,3 written 0-based
  return permutation_group({
    {0, 1, 2},  // id
    {1, 0, 2},  // (12)
    {0, 2, 1},  // (23)
    {2, 1, 0},  // (31)
    {1, 2, 0},  // (123): 1->2, 2->3, 3->1
    {2, 0, 1},  // (132): 1->3, 3->2, 2->1
  });
}

std::vector<NamedGroup> groups_of_order(Elem n)
{
  switch (n) {
  case 1: return {{"Z1", cyclic(1)}};
  case 2: return {{"Z2", cyclic(2)}};
  case 3: return {{"Z3", cyclic(3)}};
  case 4: return {{"Z4", cyclic(4)}, {"Z2xZ2", klein_four()}};
  case 5: return {{"Z5", cyclic(5)}};
  case 6: return {{"Z6", cyclic(6)}, {"S3", symmetric3()}};
  case 7: return {{"Z7", cyclic(7)}};
  case 8:
    return {{"Z8", cyclic(8)},
            {"Z4xZ2", direct_product(cyclic(4), cyclic(2))},
            {"Z2xZ2xZ2", elementary_abelian_2(3)},
            {"D4", dihedral(4)},
            {"Q8", quaternion8()}};
  default:
    throw ValidationError(Errc::OrderTooLarge, "catalogue covers orders 1..8", {n});
  }
}

FiniteGroup by_name(std::string const &name)
{
  for (Elem n = 1; n <= 8; ++n)
    for (auto &g : groups_of_order(n))
      if (g.name == name)
        return g.group;
  throw ValidationError(Errc::OutOfRange, "unknown group name '" + name + "'");
}

} // namespace skb::catalog
