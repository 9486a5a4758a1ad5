#include "skb/products.hpp"

#include "skb/exhaustive.hpp"

namespace skb
{

namespace
{

GroupAction checked_action(FiniteGroup const &g, Elem m, std::vector<Elem> table,
                           char const *name)
{
  try {
    return validate_action(g, m, std::move(table));
  }
  catch (ValidationError const &err) {
    throw ValidationError(Errc::InternalInvariantViolation,
                          std::string(name) + ": " + err.detail(), err.witness());
  }
}

void require_generalized(BraidedActionReport const &rep, char const *name)
{
  if (rep.generalized())
    return;
  auto f = rep.report.failures();
  throw ValidationError(Errc::InternalInvariantViolation,
                        std::string(name) + " not generalized braided",
                        f.empty() ? Witness{} : f.front().witness.value_or(Witness{}));
}

} // namespace

ProductActionBundle build_products(BraidingOperator const &r, GroupAction const &act,
                                   ReflectionMap const &k, Elem max_y)
{
  auto base = check_braided_action(r, act, k);
  if (!base.generalized()) {
    auto f = base.report.failures();
    throw ValidationError(Errc::NotGeneralizedBraided,
                          f.empty() ? "base" : f.front().id,
                          f.empty() ? Witness{} : f.front().witness.value_or(Witness{}));
  }

  Elem n = r.order();
  Elem m = act.set_size();
  if (static_cast<std::size_t>(n) * m > max_y)
    throw ValidationError(Errc::OrderTooLarge, "product set too large", {n * m, max_y});
  Elem ys = n * m;
  auto const &circ = r.circ();
  auto enc = [m](Elem b, Elem x) { return b * m + x; };

  std::vector<Pair> ky;
  std::vector<Elem> triv, mk, mr;
  ky.reserve(static_cast<std::size_t>(n) * ys);
  triv.reserve(ky.capacity());
  mk.reserve(ky.capacity());
  mr.reserve(ky.capacity());

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem x = 0; x < m; ++x) {
        auto [a1, b1] = r(a, b);

        auto [b2, x2] = k(b1, x);
        auto [a3, b3] = r(a1, b2);
        ky.emplace_back(a3, enc(b3, x2));

        triv.push_back(enc(circ.mul(a, b), x));

        mk.push_back(enc(circ.mul(a1, b2), x2));
        mr.push_back(enc(a1, act.act(b1, x)));
      }

  ProductActionBundle p{
      r,
      act,
      k,
      ys,
      ReflectionMap(n, ys, std::move(ky)),
      checked_action(circ, ys, std::move(triv), "m_triv"),
      checked_action(circ, ys, std::move(mk), "m_k"),
      checked_action(circ, ys, std::move(mr), "m_r"),
      {},
      {},
      {},
  };
  p.triv_report = check_braided_action(r, p.m_triv, p.k_y);
  p.k_report = check_braided_action(r, p.m_k, p.k_y);
  p.r_report = check_braided_action(r, p.m_r, p.k_y);
  require_generalized(p.triv_report, "m_triv");
  require_generalized(p.k_report, "m_k");
  require_generalized(p.r_report, "m_r");
  return p;
}

Report check_braid_commute(BraidingOperator const &r, GroupAction const &mY,
                           GroupAction const &mY2)
{
  if (!(mY.group() == r.circ()) || !(mY2.group() == r.circ()) ||
      mY.set_size() != mY2.set_size())
    throw ValidationError(Errc::OrderMismatch, "actions must share the group and the set");

  Elem n = r.order();
  Elem ys = mY.set_size();
  auto commutes = [&](GroupAction const &u, GroupAction const &v) {
    return first_violation<3>({n, n, ys}, [&](auto const &t) {
      auto [a, b, y] = t;
      return u.act(a, v.act(b, y)) == v.act(r.rhd(a, b), u.act(r.lhd(a, b), y));
    });
  };

  Report rep;
  rep.add("EqCommBraid1", commutes(mY, mY2));
  auto rev = commutes(mY2, mY);
  rep.note("Reverse", !rev, rev);
  return rep;
}

ThetaAction theta_from_pair(BraidingOperator const &r, GroupAction const &mY,
                            GroupAction const &mY2)
{
  Report rep = check_braid_commute(r, mY, mY2);
  if (!rep.passed("EqCommBraid1"))
    throw ValidationError(Errc::NotBraidCommuting, "EqCommBraid1",
                          rep.find("EqCommBraid1")->witness.value_or(Witness{}));

  TwistedProductGroup tw = twisted_product(brace_from_braiding(r));
  Elem n = r.order();
  Elem ys = mY.set_size();
  std::vector<Elem> table(static_cast<std::size_t>(n) * n * ys);
  for (Elem t = 0; t < n * n; ++t) {
    auto [a, b] = tw.decode(t);
    for (Elem y = 0; y < ys; ++y)
      table[t * ys + y] = mY2.act(a, mY.act(b, y));
  }
  GroupAction theta = checked_action(tw.group, ys, std::move(table), "theta");
  return ThetaAction{std::move(tw), std::move(theta)};
}

std::pair<GroupAction, GroupAction> split_theta(ThetaAction const &t,
                                                FiniteGroup const &circ)
{
  Elem n = t.product.base_order;
  Elem e = circ.unit();
  Elem ys = t.theta.set_size();
  std::vector<Elem> first(static_cast<std::size_t>(n) * ys), second(first.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem y = 0; y < ys; ++y) {
      first[a * ys + y] = t.theta.act(t.product.encode(e, a), y);
      second[a * ys + y] = t.theta.act(t.product.encode(a, e), y);
    }
  return {validate_action(circ, ys, std::move(first)),
          validate_action(circ, ys, std::move(second))};
}

std::optional<Witness> iota_fiber_violation(ThetaAction const &t,
                                            GroupAction const &base_act)
{
  Elem n = t.product.base_order;
  Elem m = base_act.set_size();
  Elem ys = t.theta.set_size();
  auto m_x = [&](Elem y) { return base_act.act(y / m, y % m); };
  return first_violation<2>({n, ys}, [&](auto const &w) {
    auto [a, y] = w;
    return m_x(t.theta.act(t.product.iota[a], y)) == m_x(y);
  });
}

std::optional<Witness> mx_equivariance_violation(ProductActionBundle const &p)
{
  Elem n = p.r.order();
  Elem m = p.base_act.set_size();
  auto const &act = p.base_act;
  return first_violation<3>({n, n, m}, [&](auto const &t) {
    auto [a, b, x] = t;
    auto [c, y] = p.decode(p.m_k.act(a, p.encode(b, x)));
    return act.act(c, y) == act.act(a, act.act(b, x));
  });
}

ReflectionMap k_from_product_action(GroupAction const &mY, Elem m)
{
  Elem n = mY.group().order();
  if (m == 0 || mY.set_size() != n * m)
    throw ValidationError(Errc::OrderMismatch, "action is not on A x X", {mY.set_size(), m});
  Elem e = mY.group().unit();
  std::vector<Pair> t;
  t.reserve(static_cast<std::size_t>(n) * m);
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < m; ++x) {
      Elem y = mY.act(a, e * m + x);
      t.emplace_back(y / m, y % m);
    }
  return ReflectionMap(n, m, std::move(t));
}

std::vector<AmplificationLevel> iterate_amplification(BraidingOperator const &r,
                                                      GroupAction const &act,
                                                      ReflectionMap const &k,
                                                      unsigned depth, CarriedAction carry,
                                                      Elem max_y)
{
  std::size_t size = act.set_size();
  for (unsigned i = 0; i < depth; ++i) {
    size *= r.order();
    if (size > max_y)
      throw ValidationError(Errc::OrderTooLarge, "amplified set too large",
                            {static_cast<Elem>(i + 1), max_y});
  }

  PairMap rr = r.as_pair_map();
  std::vector<AmplificationLevel> levels;
  levels.push_back({act, k, check_reflection_equation(rr, k)});
  for (unsigned i = 0; i < depth; ++i) {
    auto const &prev = levels.back();
    ProductActionBundle p = build_products(r, prev.act, prev.k, max_y);
    GroupAction const &next = carry == CarriedAction::k      ? p.m_k
                              : carry == CarriedAction::triv ? p.m_triv
                                                             : p.m_r;
    levels.push_back({next, p.k_y, check_reflection_equation(rr, p.k_y)});
  }
  return levels;
}

} // namespace skb
