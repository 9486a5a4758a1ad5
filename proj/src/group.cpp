#include "skb/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "skb/exhaustive.hpp"

namespace skb
{

namespace
{

std::vector<Elem> flatten(Table const &rows, Elem n, Elem cols, char const *what)
{
  if (rows.size() != n)
    throw ValidationError(Errc::OutOfRange,
                          std::string(what) + " has " + std::to_string(rows.size()) +
                            " rows, expected " + std::to_string(n));
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n) * cols);
  for (Elem r = 0; r < n; ++r) {
    if (rows[r].size() != cols)
      throw ValidationError(Errc::OutOfRange,
                            std::string(what) + " row " + std::to_string(r) +
                              " has wrong length",
                            {r});
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return flat;
}

Table unflatten(std::span<Elem const> flat, Elem rows, Elem cols)
{
  Table out(rows);
  for (Elem r = 0; r < rows; ++r)
    out[r].assign(flat.begin() + r * cols, flat.begin() + (r + 1) * cols);
  return out;
}

bool is_permutation_of_range(std::vector<Elem> const &v, Elem n)
{
  std::vector<bool> seen(n, false);
  for (Elem x : v) {
    if (seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

} // namespace

Table FiniteGroup::rows() const { return unflatten(_mul, _n, _n); }

bool FiniteGroup::is_abelian() const
{
  for (Elem a = 0; a < _n; ++a)
    for (Elem b = a + 1; b < _n; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

FiniteGroup FiniteGroup::opposite() const
{
  std::vector<Elem> op(_mul.size());
  for (Elem a = 0; a < _n; ++a)
    for (Elem b = 0; b < _n; ++b)
      op[a * _n + b] = mul(b, a);
  return FiniteGroup(_n, _unit, std::move(op), _inv);
}

FiniteGroup validate_group(Table const &mul, Elem unit)
{
  auto n = static_cast<Elem>(mul.size());
  return validate_group(n, flatten(mul, n, n, "group table"), unit);
}

FiniteGroup validate_group(Elem n, std::vector<Elem> flat, Elem unit)
{
  if (n == 0)
    throw ValidationError(Errc::OutOfRange, "empty group");
  if (flat.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError(Errc::OutOfRange, "table is not n x n");
  if (unit >= n)
    throw ValidationError(Errc::OutOfRange, "unit index out of range", {unit});
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] >= n)
      throw ValidationError(Errc::OutOfRange, "table entry out of range",
                            {static_cast<Elem>(i / n), static_cast<Elem>(i % n)});

  auto m = [&](Elem a, Elem b) { return flat[a * n + b]; };

  for (Elem a = 0; a < n; ++a)
    if (m(unit, a) != a || m(a, unit) != a)
      throw ValidationError(Errc::BadUnit, "unit does not fix element", {a});

  for (Elem r = 0; r < n; ++r) {
    std::vector<Elem> row(flat.begin() + r * n, flat.begin() + (r + 1) * n);
    if (!is_permutation_of_range(row, n))
      throw ValidationError(Errc::NotLatin, "row " + std::to_string(r), {r});
  }
  for (Elem c = 0; c < n; ++c) {
    std::vector<Elem> col(n);
    for (Elem r = 0; r < n; ++r)
      col[r] = m(r, c);
    if (!is_permutation_of_range(col, n))
      throw ValidationError(Errc::NotLatin, "column " + std::to_string(c), {c});
  }

  std::vector<Elem> inv(n);
  for (Elem a = 0; a < n; ++a) {
    Elem b = 0;
    while (m(a, b) != unit)
      ++b;  // exists: rows are permutations
    if (m(b, a) != unit)
      throw ValidationError(Errc::NoInverse, "no two-sided inverse", {a});
    inv[a] = b;
  }

  auto bad = first_violation<3>({n, n, n}, [&](auto const &t) {
    return m(m(t[0], t[1]), t[2]) == m(t[0], m(t[1], t[2]));
  });
  if (bad)
    throw ValidationError(Errc::NotAssociative, "(ab)c != a(bc)", *bad);

  return FiniteGroup(n, unit, std::move(flat), std::move(inv));
}

Elem element_order(FiniteGroup const &g, Elem a)
{
  Elem k = 1;
  for (Elem p = a; p != g.unit(); p = g.mul(p, a))
    ++k;
  return k;
}

Endo identity_endo(Elem n)
{
  Endo e;
  e.map.resize(n);
  std::iota(e.map.begin(), e.map.end(), Elem{0});
  return e;
}

Endo constant_endo(FiniteGroup const &g)
{
  return Endo{std::vector<Elem>(g.order(), g.unit())};
}

Endo compose(Endo const &f, Endo const &g)
{
  Endo out;
  out.map.resize(g.map.size());
  for (std::size_t a = 0; a < g.map.size(); ++a)
    out.map[a] = f.map[g.map[a]];
  return out;
}

std::optional<Endo> invert(Endo const &f)
{
  Endo out;
  out.map.assign(f.map.size(), static_cast<Elem>(f.map.size()));
  for (std::size_t a = 0; a < f.map.size(); ++a) {
    if (out.map[f.map[a]] != f.map.size())
      return std::nullopt;
    out.map[f.map[a]] = static_cast<Elem>(a);
  }
  return out;
}

std::optional<Witness> endomorphism_violation(FiniteGroup const &g, Endo const &f)
{
  Elem n = g.order();
  if (f.size() != n)
    return Witness{};
  for (Elem v : f.map)
    if (v >= n)
      return Witness{};
  return first_violation<2>({n, n}, [&](auto const &t) {
    return f(g.mul(t[0], t[1])) == g.mul(f(t[0]), f(t[1]));
  });
}

bool is_endomorphism(FiniteGroup const &g, Endo const &f)
{
  return !endomorphism_violation(g, f).has_value();
}

namespace detail
{

std::vector<Endo> endomorphisms_by_filter(FiniteGroup const &g)
{
  Elem n = g.order();
  std::vector<Endo> out;
  std::vector<Elem> f(n, 0);

  // f is assigned on 0..a; check every product relation this assignment closes.
  auto consistent = [&](Elem a) {
    for (Elem x = 0; x <= a; ++x)
      for (Elem y = 0; y <= a; ++y) {
        Elem z = g.mul(x, y);
        if (z > a || (x != a && y != a && z != a))
          continue;
        if (f[z] != g.mul(f[x], f[y]))
          return false;
      }
    return true;
  };

  auto rec = [&](auto &self, Elem a) -> void {
    if (a == n) {
      out.push_back(Endo{f});
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      f[a] = v;
      if (consistent(a))
        self(self, a + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Endo> endomorphisms_by_generators(FiniteGroup const &g)
{
  Elem n = g.order();
  auto gens = generating_set(g);
  std::vector<Endo> out;
  std::vector<Elem> images(gens.size(), 0);

  auto extend = [&]() -> std::optional<Endo> {
    std::vector<Elem> f(n, n);
    f[g.unit()] = g.unit();
    std::deque<Elem> queue{g.unit()};
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Elem y = g.mul(x, gens[i]);
        Elem fy = g.mul(f[x], images[i]);
        if (f[y] == n) {
          f[y] = fy;
          queue.push_back(y);
        } else if (f[y] != fy) {
          return std::nullopt;
        }
      }
    }
    Endo e{std::move(f)};
    if (!is_endomorphism(g, e))
      return std::nullopt;
    return e;
  };

  auto rec = [&](auto &self, std::size_t i) -> void {
    if (i == gens.size()) {
      if (auto e = extend())
        out.push_back(std::move(*e));
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      images[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

std::vector<Elem> generating_set(FiniteGroup const &g)
{
  Elem n = g.order();
  std::vector<Elem> gens;
  std::vector<bool> in_sub(n, false);
  in_sub[g.unit()] = true;

  for (Elem a = 0; a < n; ++a) {
    if (in_sub[a])
      continue;
    gens.push_back(a);
    std::deque<Elem> queue;
    for (Elem x = 0; x < n; ++x)
      if (in_sub[x])
        queue.push_back(x);
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        Elem y = g.mul(x, s);
        if (!in_sub[y]) {
          in_sub[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::vector<Endo> endomorphism_monoid(FiniteGroup const &g, bool automorphisms_only)
{
  auto all = g.order() <= 8 ? detail::endomorphisms_by_filter(g)
                            : detail::endomorphisms_by_generators(g);
  if (automorphisms_only)
    std::erase_if(all, [](Endo const &e) { return !invert(e).has_value(); });
  return all;
}

Endo conjugation_endo(FiniteGroup const &g, Elem s, Conjugation convention)
{
  Endo e;
  e.map.resize(g.order());
  Elem si = g.inv(s);
  for (Elem t = 0; t < g.order(); ++t)
    e.map[t] = convention == Conjugation::mu ? g.mul(g.mul(s, t), si)
                                             : g.mul(g.mul(si, t), s);
  return e;
}

Table GroupAction::rows() const { return unflatten(_act, _group.order(), _m); }

GroupAction validate_action(FiniteGroup const &g, Elem set_size, Table const &act)
{
  return validate_action(g, set_size, flatten(act, g.order(), set_size, "action table"));
}

GroupAction validate_action(FiniteGroup const &g, Elem set_size, std::vector<Elem> flat)
{
  Elem n = g.order();
  Elem m = set_size;
  if (m == 0)
    throw ValidationError(Errc::OutOfRange, "empty set");
  if (flat.size() != static_cast<std::size_t>(n) * m)
    throw ValidationError(Errc::OutOfRange, "action table is not n x m");
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] >= m)
      throw ValidationError(Errc::OutOfRange, "action entry out of range",
                            {static_cast<Elem>(i / m), static_cast<Elem>(i % m)});

  auto act = [&](Elem a, Elem x) { return flat[a * m + x]; };
  for (Elem x = 0; x < m; ++x)
    if (act(g.unit(), x) != x)
      throw ValidationError(Errc::NotAction, "unit moves a point", {x});

  auto bad = first_violation<3>({n, n, m}, [&](auto const &t) {
    return act(t[0], act(t[1], t[2])) == act(g.mul(t[0], t[1]), t[2]);
  });
  if (bad)
    throw ValidationError(Errc::NotAction, "a.(b.x) != (ab).x", *bad);

  return GroupAction(g, m, std::move(flat));
}

GroupAction left_translation(FiniteGroup const &g)
{
  std::vector<Elem> flat(g.flat_table().begin(), g.flat_table().end());
  return validate_action(g, g.order(), std::move(flat));
}

GroupAction trivial_action(FiniteGroup const &g, Elem set_size)
{
  std::vector<Elem> flat(static_cast<std::size_t>(g.order()) * set_size);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x = 0; x < set_size; ++x)
      flat[a * set_size + x] = x;
  return validate_action(g, set_size, std::move(flat));
}

std::vector<std::vector<Elem>> orbits(GroupAction const &act)
{
  Elem m = act.set_size();
  Elem n = act.group().order();
  std::vector<bool> seen(m, false);
  std::vector<std::vector<Elem>> out;

  for (Elem x0 = 0; x0 < m; ++x0) {
    if (seen[x0])
      continue;
    std::vector<Elem> orbit{x0};
    seen[x0] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem a = 0; a < n; ++a) {
        Elem y = act.act(a, orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }

  std::stable_sort(out.begin(), out.end(), [](auto const &l, auto const &r) {
    if (l.size() != r.size())
      return l.size() < r.size();
    return l.front() < r.front();
  });
  return out;
}

std::vector<Elem> stabilizer(GroupAction const &act, Elem x)
{
  std::vector<Elem> out;
  for (Elem a = 0; a < act.group().order(); ++a)
    if (act.act(a, x) == x)
      out.push_back(a);
  return out;
}

std::optional<std::vector<Elem>> find_group_isomorphism(FiniteGroup const &g,
                                                        FiniteGroup const &h)
{
  Elem n = g.order();
  if (h.order() != n)
    return std::nullopt;

  std::vector<Elem> phi(n, n);
  std::vector<bool> used(n, false);
  phi[g.unit()] = h.unit();
  used[h.unit()] = true;

  auto consistent = [&]() {
    for (Elem x = 0; x < n; ++x) {
      if (phi[x] == n)
        continue;
      for (Elem y = 0; y < n; ++y) {
        Elem z = g.mul(x, y);
        if (phi[y] == n || phi[z] == n)
          continue;
        if (phi[z] != h.mul(phi[x], phi[y]))
          return false;
      }
    }
    return true;
  };

  auto rec = [&](auto &self, Elem a) -> bool {
    if (a == n)
      return true;
    if (phi[a] != n)
      return self(self, a + 1);
    for (Elem v = 0; v < n; ++v) {
      if (used[v])
        continue;
      phi[a] = v;
      used[v] = true;
      if (consistent() && self(self, a + 1))
        return true;
      used[v] = false;
    }
    phi[a] = n;
    return false;
  };

  if (!rec(rec, 0))
    return std::nullopt;
  return phi;
}

std::optional<std::vector<Elem>>
find_equivariant_bijection(GroupAction const &lhs, std::vector<Elem> const &orbit,
                           GroupAction const &rhs)
{
  if (!(lhs.group() == rhs.group()) || orbit.empty() ||
      orbit.size() != rhs.set_size())
    return std::nullopt;

  Elem n = lhs.group().order();
  Elem m = rhs.set_size();
  Elem sentinel = m;
  Elem base = orbit.front();

  std::vector<Elem> position(lhs.set_size(), sentinel);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    position[orbit[i]] = static_cast<Elem>(i);

  for (Elem target = 0; target < m; ++target) {
    std::vector<Elem> f(orbit.size(), sentinel);
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      Elem p = position[lhs.act(a, base)];
      if (p == sentinel) {
        ok = false;
        break;
      }
      Elem y = rhs.act(a, target);
      if (f[p] == sentinel)
        f[p] = y;
      else if (f[p] != y)
        ok = false;
    }
    if (!ok || std::count(f.begin(), f.end(), sentinel) != 0)
      continue;
    std::vector<Elem> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;

    bool equivariant = true;
    for (Elem a = 0; a < n && equivariant; ++a)
      for (std::size_t i = 0; i < orbit.size() && equivariant; ++i) {
        Elem p = position[lhs.act(a, orbit[i])];
        equivariant = p != sentinel && f[p] == rhs.act(a, f[i]);
      }
    if (equivariant)
      return f;
  }
  return std::nullopt;
}

} // namespace skb
