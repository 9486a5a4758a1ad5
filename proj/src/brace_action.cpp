#include "skb/brace_action.hpp"

#include <algorithm>

#include "skb/exhaustive.hpp"

namespace skb
{

Endo diamond(SkewBrace const &b, Elem a, Endo const &chi)
{
  if (chi.size() != b.order())
    throw ValidationError(Errc::OrderMismatch, "endomorphism of the wrong size",
                          {chi.size(), b.order()});
  if (auto w = endomorphism_violation(b.dot(), chi))
    throw ValidationError(Errc::NotEndomorphism, "chi(a . b) != chi(a) . chi(b)", *w);

  Elem abar = b.circ().inv(a);
  Endo out{std::vector<Elem>(b.order())};
  for (Elem t = 0; t < b.order(); ++t)
    out.map[t] = b.lambda(a, chi(b.rho(abar, t)));
  if (auto w = endomorphism_violation(b.dot(), out))
    throw ValidationError(Errc::InternalLemmaViolation, "a <> chi not an endomorphism", *w);
  return out;
}

Report validate_brace_action(SkewBrace const &b, GroupAction const &act,
                             std::vector<Endo> const &pi)
{
  Elem n = b.order();
  Elem m = act.set_size();
  if (!(act.group() == b.circ()))
    throw ValidationError(Errc::OrderMismatch, "action is not an action of (A, o)");
  if (pi.size() != m)
    throw ValidationError(Errc::OrderMismatch, "pi must have one map per point",
                          {static_cast<Elem>(pi.size()), m});
  for (Elem x = 0; x < m; ++x) {
    if (pi[x].size() != n)
      throw ValidationError(Errc::OrderMismatch, "pi_x has the wrong size", {x});
    for (Elem a = 0; a < n; ++a)
      if (pi[x](a) >= n)
        throw ValidationError(Errc::OutOfRange, "pi_x(a) out of range", {x, a});
  }

  auto const &circ = b.circ();
  auto const &dot = b.dot();

  Report rep;
  auto endo = first_violation<3>({m, n, n}, [&](auto const &t) {
    auto [x, a, c] = t;
    return pi[x](dot.mul(a, c)) == dot.mul(pi[x](a), pi[x](c));
  });
  auto equiv = first_violation<3>({n, m, n}, [&](auto const &t) {
    auto [a, x, c] = t;
    return pi[act.act(a, x)](c) == b.lambda(a, pi[x](b.rho(circ.inv(a), c)));
  });
  auto cocycle = first_violation<3>({m, n, n}, [&](auto const &t) {
    auto [x, a, c] = t;
    Elem y = act.act(circ.inv(a), x);
    return pi[x](circ.mul(a, c)) == dot.mul(b.lambda(a, pi[y](c)), pi[x](a));
  });

  rep.add("Endomorphism", endo);
  rep.add("Equivariance", equiv);
  rep.add("TwistedCocycle", cocycle);
  rep.add_flag("PropEquivalence", (!endo && !cocycle) == (!endo && !equiv));
  return rep;
}

BraceAction make_brace_action(SkewBrace b, GroupAction act, std::vector<Endo> pi)
{
  Report rep = validate_brace_action(b, act, pi);
  if (auto f = rep.failures(); !f.empty())
    throw ValidationError(Errc::InvalidAction, f.front().id,
                          f.front().witness.value_or(Witness{}));
  return BraceAction{std::move(b), std::move(act), std::move(pi)};
}

BraceAction universal_action(SkewBrace const &b)
{
  std::vector<Endo> endos = endomorphism_monoid(b.dot());
  Elem n = b.order();
  auto m = static_cast<Elem>(endos.size());
  std::vector<Elem> act(static_cast<std::size_t>(n) * m);
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < m; ++x) {
      Endo img = diamond(b, a, endos[x]);
      auto it = std::lower_bound(endos.begin(), endos.end(), img);
      act[a * m + x] = static_cast<Elem>(it - endos.begin());
    }
  GroupAction ga = validate_action(b.circ(), m, std::move(act));
  return make_brace_action(b, std::move(ga), std::move(endos));
}

BraceAction standard_action(SkewBrace const &b)
{
  std::vector<Endo> pi;
  for (Elem a = 0; a < b.order(); ++a)
    pi.push_back(conjugation_endo(b.dot(), a, Conjugation::alpha));
  return make_brace_action(b, left_translation(b.circ()), std::move(pi));
}

BraceAction trivial_extension(SkewBrace const &b, GroupAction const &act)
{
  std::vector<Endo> pi(act.set_size(), constant_endo(b.dot()));
  return make_brace_action(b, act, std::move(pi));
}

BraceAction irreducible_action(SkewBrace const &b, std::vector<Elem> const &subgroup,
                               Endo const &chi)
{
  auto const &circ = b.circ();
  Elem n = b.order();

  std::vector<bool> in_s(n, false);
  for (Elem s : subgroup) {
    if (s >= n)
      throw ValidationError(Errc::OutOfRange, "subgroup element out of range", {s});
    in_s[s] = true;
  }
  if (!in_s[circ.unit()])
    throw ValidationError(Errc::NotSubgroup, "unit missing", {circ.unit()});
  for (Elem s : subgroup)
    for (Elem t : subgroup)
      if (!in_s[circ.mul(s, t)])
        throw ValidationError(Errc::NotSubgroup, "not closed under o", {s, t});

  if (chi.size() != n)
    throw ValidationError(Errc::OrderMismatch, "chi has the wrong size");
  if (auto w = endomorphism_violation(b.dot(), chi))
    throw ValidationError(Errc::NotEndomorphism, "chi(a . b) != chi(a) . chi(b)", *w);

  std::vector<Elem> members;
  for (Elem s = 0; s < n; ++s)
    if (in_s[s])
      members.push_back(s);
  for (Elem s : members)
    for (Elem a = 0; a < n; ++a)
      if (chi(circ.mul(s, a)) != b.dot().mul(b.lambda(s, chi(a)), chi(s)))
        throw ValidationError(Errc::CocycleFailed,
                              "chi(s o a) != lambda_s(chi(a)) . chi(s)", {s, a});

  // coset index of every element; cosets numbered by increasing least member
  std::vector<Elem> coset(n, n);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (coset[a] != n)
      continue;
    auto idx = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem s : members)
      coset[circ.mul(a, s)] = idx;
  }

  auto m = static_cast<Elem>(reps.size());
  std::vector<Elem> act(static_cast<std::size_t>(n) * m);
  for (Elem g = 0; g < n; ++g)
    for (Elem x = 0; x < m; ++x)
      act[g * m + x] = coset[circ.mul(g, reps[x])];

  std::vector<Endo> pi;
  for (Elem x = 0; x < m; ++x)
    pi.push_back(diamond(b, reps[x], chi));
  for (Elem a = 0; a < n; ++a)
    if (diamond(b, a, chi) != pi[coset[a]])
      throw ValidationError(Errc::InternalLemmaViolation,
                            "a <> chi depends on the coset representative", {a});

  return make_brace_action(b, validate_action(circ, m, std::move(act)), std::move(pi));
}

BraceAction inner_action(SkewBrace const &b, GroupAction const &act,
                         std::vector<Elem> const &c)
{
  Elem n = b.order();
  Elem m = act.set_size();
  if (c.size() != m)
    throw ValidationError(Errc::OrderMismatch, "c must have one entry per point");
  for (Elem x = 0; x < m; ++x)
    if (c[x] >= n)
      throw ValidationError(Errc::OutOfRange, "c_x out of range", {x});

  auto bad = first_violation<2>({n, m}, [&](auto const &t) {
    auto [a, x] = t;
    return c[act.act(a, x)] == b.circ().mul(a, c[x]);
  });
  if (bad)
    throw ValidationError(Errc::NotEquivariant, "c(a o x) != a o c(x)", *bad);

  std::vector<Endo> pi;
  for (Elem x = 0; x < m; ++x)
    pi.push_back(conjugation_endo(b.dot(), c[x], Conjugation::alpha));
  return make_brace_action(b, act, std::move(pi));
}

std::vector<Endo> fixed_endomorphisms(SkewBrace const &b)
{
  Elem n = b.order();
  std::vector<Endo> by_diamond, by_intertwining;
  for (auto const &chi : endomorphism_monoid(b.dot())) {
    bool fixed = true, intertwines = true;
    for (Elem a = 0; a < n && fixed; ++a)
      fixed = diamond(b, a, chi) == chi;
    for (Elem a = 0; a < n && intertwines; ++a)
      for (Elem t = 0; t < n && intertwines; ++t)
        intertwines = chi(b.rho(a, t)) == b.lambda(a, chi(t));
    if (fixed)
      by_diamond.push_back(chi);
    if (intertwines)
      by_intertwining.push_back(chi);
  }
  if (by_diamond != by_intertwining)
    throw ValidationError(Errc::InternalLemmaViolation,
                          "fixed points and intertwiners differ");
  return by_diamond;
}

} // namespace skb
