#include "skb/reflection.hpp"

#include <array>

#include "skb/exhaustive.hpp"

namespace skb
{

namespace
{

using Triple = std::array<Elem, 3>;

// (z1, z2, x): r acts on the first two slots, k on the last two.
Triple on_r(PairMap const &r, Triple t)
{
  auto [u, v] = r(t[0], t[1]);
  return {u, v, t[2]};
}

Triple on_k(ReflectionMap const &k, Triple t)
{
  auto [u, v] = k(t[1], t[2]);
  return {t[0], u, v};
}

void check_shapes(PairMap const &r, ReflectionMap const &k)
{
  if (r.p() != r.q() || k.p() != r.p())
    throw ValidationError(Errc::OrderMismatch, "k must be a map on Z x X for r on Z x Z",
                          {r.p(), r.q(), k.p()});
}

} // namespace

std::optional<Witness> reflection_violation(PairMap const &r, ReflectionMap const &k)
{
  check_shapes(r, k);
  Elem n = r.p();
  return first_violation<3>({n, n, k.q()}, [&](Triple const &t) {
    Triple lhs = on_r(r, on_k(k, on_r(r, on_k(k, t))));
    Triple rhs = on_k(k, on_r(r, on_k(k, on_r(r, t))));
    return lhs == rhs;
  });
}

Report check_reflection_equation(PairMap const &r, ReflectionMap const &k)
{
  check_shapes(r, k);
  Report rep;
  rep.append(check_braid_relation(r), "r.");
  rep.add("EqRE", reflection_violation(r, k));
  auto w = k.injectivity_violation();
  rep.note("KBijective", !w, w);
  return rep;
}

std::string_view to_string(Classification c)
{
  switch (c) {
  case Classification::braided:
    return "braided";
  case Classification::generalized_braided:
    return "generalized-braided";
  case Classification::neither:
    break;
  }
  return "neither";
}

BraidedActionReport check_braided_action(BraidingOperator const &r,
                                         GroupAction const &act,
                                         ReflectionMap const &k)
{
  Elem n = r.order();
  Elem m = act.set_size();
  if (!(act.group() == r.circ()))
    throw ValidationError(Errc::OrderMismatch, "action group differs from the braided group");
  if (k.p() != n || k.q() != m)
    throw ValidationError(Errc::OrderMismatch, "k has the wrong shape", {k.p(), k.q()});

  auto const &circ = r.circ();
  Elem e = circ.unit();

  BraidedActionReport out;
  Report &rep = out.report;
  rep.add("EqBraid2", first_violation<3>({n, n, m}, [&](auto const &t) {
            auto [a, b, x] = t;
            auto [b1, x1] = k(b, x);
            auto [c2, x2] = k(r.lhd(a, b1), x1);
            return k(circ.mul(a, b), x) == Pair{circ.mul(r.rhd(a, b1), c2), x2};
          }));
  rep.add("EqBraidk1", first_violation<3>({n, n, m}, [&](auto const &t) {
            auto [a, b, x] = t;
            auto [a1, b1] = r(a, b);
            auto [c, y] = k(b1, x);
            return k(a, act.act(b, x)) == Pair{r.rhd(a1, c), act.act(r.lhd(a1, c), y)};
          }));
  rep.add("EqUnitk", first_violation<1>({m}, [&](auto const &t) {
            return k(e, t[0]) == Pair{e, t[0]};
          }));
  rep.add("EqTrivmXk", first_violation<2>({n, m}, [&](auto const &t) {
            auto [a, x] = t;
            auto [u, y] = k(a, x);
            return act.act(u, y) == act.act(a, x);
          }));
  rep.add("EqRE", reflection_violation(r.as_pair_map(), k));

  bool core = rep.passed("EqBraid2") && rep.passed("EqBraidk1") && rep.passed("EqUnitk");
  bool braided = core && rep.passed("EqTrivmXk");
  rep.add_flag("BraidedImpliesRE", !braided || rep.passed("EqRE"));

  if (braided)
    out.classification = Classification::braided;
  else if (core && rep.passed("EqRE"))
    out.classification = Classification::generalized_braided;
  return out;
}

ReflectionMap k_from_action(BraceAction const &a)
{
  Report valid = validate_brace_action(a.brace, a.circ_act, a.pi);
  if (auto f = valid.failures(); !f.empty())
    throw ValidationError(Errc::InvalidAction, f.front().id,
                          f.front().witness.value_or(Witness{}));

  auto const &circ = a.brace.circ();
  auto const &act = a.circ_act;
  Elem n = a.brace.order();
  Elem m = a.set_size();

  std::vector<Pair> table;
  table.reserve(static_cast<std::size_t>(n) * m);
  for (Elem g = 0; g < n; ++g)
    for (Elem x = 0; x < m; ++x) {
      Elem gx = act.act(g, x);
      Elem u = a.pi[gx](g);
      table.emplace_back(u, act.act(circ.inv(u), gx));
    }
  ReflectionMap k(n, m, std::move(table));

  auto rep = check_braided_action(braiding_from_brace(a.brace), act, k);
  if (!rep.braided()) {
    auto f = rep.report.failures();
    throw ValidationError(Errc::InternalAxiomViolation,
                          f.empty() ? "not braided" : f.front().id,
                          f.empty() ? Witness{} : f.front().witness.value_or(Witness{}));
  }
  return k;
}

BraceAction action_from_k(SkewBrace const &b, GroupAction const &act,
                          ReflectionMap const &k)
{
  auto rep = check_braided_action(braiding_from_brace(b), act, k);
  if (!rep.braided()) {
    auto f = rep.report.failures();
    throw ValidationError(Errc::NotBraided, f.empty() ? "not braided" : f.front().id,
                          f.empty() ? Witness{} : f.front().witness.value_or(Witness{}));
  }

  Elem n = b.order();
  Elem m = act.set_size();
  std::vector<Endo> pi(m, Endo{std::vector<Elem>(n)});
  for (Elem x = 0; x < m; ++x)
    for (Elem a = 0; a < n; ++a)
      pi[x].map[a] = k(a, act.act(b.circ().inv(a), x)).first;
  return make_brace_action(b, act, std::move(pi));
}

KSquared k_squared(BraidingOperator const &r)
{
  PairMap rr = r.as_pair_map();
  return {left_translation(r.circ()), compose(rr, rr)};
}

BetaFamily beta_machinery(BraceAction const &a)
{
  Report valid = validate_brace_action(a.brace, a.circ_act, a.pi);
  if (auto f = valid.failures(); !f.empty())
    throw ValidationError(Errc::InvalidAction, f.front().id,
                          f.front().witness.value_or(Witness{}));

  auto const &br = a.brace;
  auto const &circ = br.circ();
  auto const &dot = br.dot();
  auto const &act = a.circ_act;
  Elem n = br.order();
  Elem m = a.set_size();
  Elem e = circ.unit();

  auto mul = [&](std::initializer_list<Elem> xs) {
    Elem acc = e;
    for (Elem x : xs)
      acc = dot.mul(acc, x);
    return acc;
  };

  BetaFamily f;
  f.n = n;
  f.m = m;
  f.beta.resize(static_cast<std::size_t>(m) * n);
  f.dotx.resize(static_cast<std::size_t>(m) * n * n);
  for (Elem x = 0; x < m; ++x)
    for (Elem u = 0; u < n; ++u) {
      Elem bu = dot.mul(u, dot.inv(a.pi[x](u)));
      f.beta[x * n + u] = bu;
      for (Elem v = 0; v < n; ++v)
        f.dotx[(x * n + u) * n + v] = mul({u, v, dot.inv(u), bu});
    }

  auto beta = [&](Elem x, Elem u) { return f.beta_at(x, u); };
  auto dx = [&](Elem x, Elem u, Elem v) { return f.dot_at(x, u, v); };

  Report &rep = f.report;
  rep.add("EqDefPiforBet", first_violation<2>({m, n}, [&](auto const &t) {
            auto [x, u] = t;
            return a.pi[x](u) == dot.mul(dot.inv(beta(x, u)), u);
          }));
  rep.add("EqDefrhox", first_violation<3>({m, n, n}, [&](auto const &t) {
            auto [x, u, v] = t;
            Elem vb = circ.inv(v);
            return dx(x, u, v) == circ.mul(v, beta(act.act(vb, x), br.rho(vb, u)));
          }));
  rep.add("EqActProprhox", first_violation<4>({m, n, n, n}, [&](auto const &t) {
            auto [x, u, v, w] = t;
            return dx(x, dot.mul(u, v), w) == dx(x, u, dx(x, v, w)) && dx(x, e, w) == w;
          }));
  rep.add("EqCompdotxcirc", first_violation<4>({m, n, n, n}, [&](auto const &t) {
            auto [x, u, v, w] = t;
            return circ.mul(v, dx(x, u, w)) ==
                   dx(act.act(v, x), br.rho(v, u), circ.mul(v, w));
          }));
  rep.add("EqIdProdBet", first_violation<3>({m, n, n}, [&](auto const &t) {
            auto [x, u, v] = t;
            return beta(x, dot.mul(u, v)) == mul({u, beta(x, v), dot.inv(u), beta(x, u)});
          }));
  rep.add("EqCondCommBraid", first_violation<4>({m, n, n, n}, [&](auto const &t) {
            auto [x, u, v, w] = t;
            return dx(x, u, dot.mul(v, w)) == mul({u, v, dot.inv(u), dx(x, u, w)});
          }));
  return f;
}

} // namespace skb
