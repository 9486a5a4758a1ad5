#include "skb/braiding.hpp"

#include <array>

#include "skb/exhaustive.hpp"

namespace skb
{

PairMap::PairMap(Elem p, Elem q, std::vector<Pair> table)
: _p(p), _q(q), _table(std::move(table))
{
  if (_table.size() != static_cast<std::size_t>(p) * q)
    throw ValidationError(Errc::OutOfRange, "pair map table has wrong length",
                          {static_cast<Elem>(_table.size())});
  for (Elem i = 0; i < _table.size(); ++i)
    if (_table[i].first >= p || _table[i].second >= q)
      throw ValidationError(Errc::OutOfRange, "pair map image out of range",
                            {i / q, i % q});
}

PairMap PairMap::identity(Elem p, Elem q)
{
  std::vector<Pair> t;
  t.reserve(static_cast<std::size_t>(p) * q);
  for (Elem a = 0; a < p; ++a)
    for (Elem b = 0; b < q; ++b)
      t.emplace_back(a, b);
  return PairMap(p, q, std::move(t));
}

PairMap PairMap::flip(Elem n)
{
  std::vector<Pair> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t.emplace_back(b, a);
  return PairMap(n, n, std::move(t));
}

std::optional<Witness> PairMap::injectivity_violation() const
{
  std::vector<bool> hit(_table.size(), false);
  for (Elem i = 0; i < _table.size(); ++i) {
    auto [a, b] = _table[i];
    std::size_t j = static_cast<std::size_t>(a) * _q + b;
    if (hit[j])
      return Witness{i / _q, i % _q};
    hit[j] = true;
  }
  return std::nullopt;
}

PairMap compose(PairMap const &f, PairMap const &g)
{
  if (f.p() != g.p() || f.q() != g.q())
    throw ValidationError(Errc::OrderMismatch, "pair maps of different shapes");
  std::vector<Pair> t;
  t.reserve(g.table().size());
  for (auto [a, b] : g.table())
    t.push_back(f(a, b));
  return PairMap(f.p(), f.q(), std::move(t));
}

PairMap BraidingOperator::as_pair_map() const
{
  Elem n = order();
  std::vector<Pair> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t.push_back((*this)(a, b));
  return PairMap(n, n, std::move(t));
}

Report check_braiding_axioms(FiniteGroup const &circ, std::span<Elem const> rhd,
                             std::span<Elem const> lhd)
{
  Elem n = circ.order();
  std::size_t nn = static_cast<std::size_t>(n) * n;
  if (rhd.size() != nn || lhd.size() != nn)
    throw ValidationError(Errc::OutOfRange, "braiding tables must be n x n");
  for (std::size_t i = 0; i < nn; ++i)
    if (rhd[i] >= n || lhd[i] >= n)
      throw ValidationError(Errc::OutOfRange, "braiding entry out of range",
                            {static_cast<Elem>(i / n), static_cast<Elem>(i % n)});

  auto r = [&](Elem a, Elem b) { return Pair{rhd[a * n + b], lhd[a * n + b]}; };
  auto m = [&](Elem a, Elem b) { return circ.mul(a, b); };
  Elem e = circ.unit();

  Report rep;
  rep.add("EqBraid1", first_violation<3>({n, n, n}, [&](auto const &t) {
            auto [a, b, c] = t;
            auto [b1, c1] = r(b, c);
            auto [a2, b2] = r(a, b1);
            return r(m(a, b), c) == Pair{a2, m(b2, c1)};
          }));
  rep.add("EqBraidr2", first_violation<3>({n, n, n}, [&](auto const &t) {
            auto [a, b, c] = t;
            auto [a1, b1] = r(a, b);
            auto [b2, c2] = r(b1, c);
            return r(a, m(b, c)) == Pair{m(a1, b2), c2};
          }));
  rep.add("EqBraidUnit", first_violation<1>({n}, [&](auto const &t) {
            Elem a = t[0];
            return r(a, e) == Pair{e, a} && r(e, a) == Pair{a, e};
          }));
  rep.add("EqBraidCom", first_violation<2>({n, n}, [&](auto const &t) {
            auto [a, b] = t;
            auto [u, v] = r(a, b);
            return m(u, v) == m(a, b);
          }));

  std::vector<Pair> table;
  table.reserve(nn);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      table.push_back(r(a, b));
  rep.add("Invertible", PairMap(n, n, std::move(table)).injectivity_violation());
  return rep;
}

BraidingOperator validate_braiding(FiniteGroup circ, std::vector<Elem> rhd,
                                   std::vector<Elem> lhd)
{
  Report rep = check_braiding_axioms(circ, rhd, lhd);
  auto failures = rep.failures();
  if (!failures.empty())
    throw ValidationError(Errc::AxiomsFailed, failures.front().id,
                          failures.front().witness.value_or(Witness{}));
  return BraidingOperator(std::move(circ), std::move(rhd), std::move(lhd));
}

BraidingOperator braiding_from_brace(SkewBrace const &b)
{
  Elem n = b.order();
  auto const &circ = b.circ();
  std::vector<Elem> rhd(static_cast<std::size_t>(n) * n), lhd(rhd.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      rhd[x * n + y] = b.lambda(x, y);
      lhd[x * n + y] = circ.inv(b.rho(circ.inv(y), circ.inv(x)));
    }

  Report rep = check_braiding_axioms(circ, rhd, lhd);
  if (auto f = rep.failures(); !f.empty())
    throw ValidationError(Errc::InternalAxiomViolation, f.front().id,
                          f.front().witness.value_or(Witness{}));
  return BraidingOperator(circ, std::move(rhd), std::move(lhd));
}

SkewBrace brace_from_braiding(BraidingOperator const &r)
{
  auto const &circ = r.circ();
  Elem n = circ.order();
  std::vector<Elem> dot(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      dot[a * n + b] = circ.mul(a, r.rhd(circ.inv(a), b));
  try {
    return validate_skew_brace(circ, validate_group(n, std::move(dot), circ.unit()));
  }
  catch (ValidationError const &err) {
    throw ValidationError(Errc::ResultNotBrace,
                          std::string(to_string(err.code())) + ": " + err.detail(),
                          err.witness());
  }
}

namespace
{

using Triple = std::array<Elem, 3>;

Triple apply12(PairMap const &f, Triple t)
{
  auto [u, v] = f(t[0], t[1]);
  return {u, v, t[2]};
}

Triple apply23(PairMap const &f, Triple t)
{
  auto [u, v] = f(t[1], t[2]);
  return {t[0], u, v};
}

Triple apply13(PairMap const &f, Triple t)
{
  auto [u, v] = f(t[0], t[2]);
  return {u, t[1], v};
}

} // namespace

Report check_braid_relation(PairMap const &r, bool qybe)
{
  if (r.p() != r.q())
    throw ValidationError(Errc::OrderMismatch, "braid relation needs a map on Z x Z",
                          {r.p(), r.q()});
  Elem n = r.p();
  Report rep;
  rep.add("Bijective", r.injectivity_violation());
  rep.add("BraidRelation", first_violation<3>({n, n, n}, [&](auto const &t) {
            Triple lhs = apply12(r, apply23(r, apply12(r, t)));
            Triple rhs = apply23(r, apply12(r, apply23(r, t)));
            return lhs == rhs;
          }));
  if (qybe) {
    std::vector<Pair> big_r;
    big_r.reserve(r.table().size());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        big_r.push_back(r(y, x));
    PairMap R(n, n, std::move(big_r));
    rep.add("QYBE", first_violation<3>({n, n, n}, [&](auto const &t) {
              Triple lhs = apply12(R, apply13(R, apply23(R, t)));
              Triple rhs = apply23(R, apply13(R, apply12(R, t)));
              return lhs == rhs;
            }));
  }
  return rep;
}

TwistedProductGroup twisted_product(SkewBrace const &br, Elem max_order)
{
  Elem n = br.order();
  if (static_cast<std::size_t>(n) * n > max_order)
    throw ValidationError(Errc::OrderTooLarge, "twisted product too large",
                          {n * n, max_order});

  BraidingOperator r = braiding_from_brace(br);
  auto const &circ = br.circ();
  Elem e = circ.unit();
  Elem nn = n * n;

  std::vector<Elem> mul(static_cast<std::size_t>(nn) * nn);
  for (Elem x = 0; x < nn; ++x)
    for (Elem y = 0; y < nn; ++y) {
      Elem a1 = x / n, a2 = x % n, b1 = y / n, b2 = y % n;
      Elem u = circ.mul(a1, r.rhd(a2, b1));
      Elem v = circ.mul(r.lhd(a2, b1), b2);
      mul[x * nn + y] = u * n + v;
    }

  TwistedProductGroup tw{validate_group(nn, std::move(mul), e * n + e), n, {}, {}};
  for (Elem a = 0; a < n; ++a) {
    tw.j1.push_back(tw.encode(a, e));
    tw.iota.push_back(tw.encode(a, circ.inv(a)));
  }

  auto const &g = tw.group;
  auto fail = [](char const *what, Witness w) {
    throw ValidationError(Errc::InternalInvariantViolation, what, std::move(w));
  };
  auto m_a = [&](Elem t) { return circ.mul(t / n, t % n); };

  if (auto w = first_violation<2>({nn, nn}, [&](auto const &t) {
        return m_a(g.mul(t[0], t[1])) == circ.mul(m_a(t[0]), m_a(t[1]));
      }))
    fail("multiplication map is not a homomorphism", *w);

  for (Elem t = 0; t < nn; ++t) {
    bool in_kernel = m_a(t) == e;
    bool in_image = tw.iota[t / n] == t;
    if (in_kernel != in_image)
      fail("kernel differs from iota(A)", {t / n, t % n});

    auto [a, b] = tw.decode(t);
    if (g.inv(t) == tw.encode(r.rhd(circ.inv(b), circ.inv(a)), r.lhd(circ.inv(b), circ.inv(a))))
      continue;
    fail("inverse formula", {a, b});
  }

  auto const &dot = br.dot();
  if (auto w = first_violation<2>({n, n}, [&](auto const &t) {
        auto [a, b] = t;
        return g.mul(tw.iota[a], tw.iota[b]) == tw.iota[dot.mul(a, b)] &&
               g.mul(tw.j1[a], tw.j1[b]) == tw.j1[circ.mul(a, b)] &&
               g.mul(tw.j1[b], tw.iota[a]) == g.mul(tw.iota[br.rho(b, a)], tw.j1[b]) &&
               tw.encode(a, b) == g.mul(tw.j1[circ.mul(a, b)], tw.iota[circ.inv(b)]);
      }))
    fail("embedding, interchange or factorization law", *w);

  return tw;
}

} // namespace skb
