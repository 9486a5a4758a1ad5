#include "skb/skew_brace.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "skb/catalog.hpp"
#include "skb/exhaustive.hpp"

namespace skb
{

SkewBrace validate_skew_brace(FiniteGroup circ, FiniteGroup dot)
{
  if (circ.order() != dot.order())
    throw ValidationError(Errc::OrderMismatch, "circ and dot have different orders",
                          {circ.order(), dot.order()});
  if (circ.unit() != dot.unit())
    throw ValidationError(Errc::UnitMismatch, "circ and dot have different units",
                          {circ.unit(), dot.unit()});

  Elem n = circ.order();
  auto bad = first_violation<3>({n, n, n}, [&](auto const &t) {
    Elem a = t[0], b = t[1], c = t[2];
    Elem lhs = circ.mul(a, dot.mul(b, c));
    Elem rhs = dot.mul(dot.mul(circ.mul(a, b), dot.inv(a)), circ.mul(a, c));
    return lhs == rhs;
  });
  if (bad)
    throw ValidationError(Errc::DistributivityFailed,
                          "a o (b.c) != (a o b).a^-1.(a o c)", *bad);

  return SkewBrace(std::move(circ), std::move(dot));
}

Endo LambdaRho::lambda_map(Elem a) const
{
  return Endo{std::vector<Elem>(lambda.begin() + a * n, lambda.begin() + (a + 1) * n)};
}

Endo LambdaRho::rho_map(Elem a) const
{
  return Endo{std::vector<Elem>(rho.begin() + a * n, rho.begin() + (a + 1) * n)};
}

LambdaRho lambda_rho(SkewBrace const &b)
{
  Elem n = b.order();
  LambdaRho lr;
  lr.n = n;
  lr.lambda.resize(static_cast<std::size_t>(n) * n);
  lr.rho.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      lr.lambda[a * n + c] = b.lambda(a, c);
      lr.rho[a * n + c] = b.rho(a, c);
    }

  auto const &circ = b.circ();
  auto const &dot = b.dot();
  for (Elem a = 0; a < n; ++a) {
    for (auto const &map : {lr.lambda_map(a), lr.rho_map(a)}) {
      if (auto w = endomorphism_violation(dot, map))
        throw ValidationError(Errc::InternalLemmaViolation,
                              "lambda/rho not a dot-endomorphism", *w);
      if (!invert(map))
        throw ValidationError(Errc::InternalLemmaViolation,
                              "lambda/rho not bijective", {a});
    }
  }

  for (auto const *table : {&lr.lambda, &lr.rho}) {
    auto bad = first_violation<3>({n, n, n}, [&](auto const &t) {
      Elem x = t[0], y = t[1], z = t[2];
      return (*table)[circ.mul(x, y) * n + z] == (*table)[x * n + (*table)[y * n + z]];
    });
    if (bad)
      throw ValidationError(Errc::InternalLemmaViolation,
                            "map is not an action of (A, o)", *bad);
  }
  return lr;
}

SkewBrace trivial_brace(FiniteGroup const &g) { return validate_skew_brace(g, g); }

SkewBrace opposite_brace(SkewBrace const &b)
{
  return validate_skew_brace(b.circ(), b.dot().opposite());
}

SkewBrace s3_brace()
{
  FiniteGroup s3 = catalog::symmetric3();
  Endo ad23 = conjugation_endo(s3, 2, Conjugation::mu);

  // a o b = a . lambda_a(b); lambda is trivial on the even permutations and
  // conjugation by (23) on the transpositions.
  std::vector<Elem> circ(36);
  for (Elem a = 0; a < 6; ++a) {
    bool transposition = a >= 1 && a <= 3;
    for (Elem b = 0; b < 6; ++b)
      circ[a * 6 + b] = s3.mul(a, transposition ? ad23(b) : b);
  }
  return validate_skew_brace(validate_group(6, std::move(circ), s3.unit()), s3);
}

namespace
{

class BraceSearch
{
public:
  BraceSearch(FiniteGroup const &dot)
  : _dot(dot), _n(dot.order()), _auts(endomorphism_monoid(dot, true))
  {
    auto index_of = [&](Endo const &e) {
      auto it = std::lower_bound(_auts.begin(), _auts.end(), e);
      return static_cast<int>(it - _auts.begin());
    };
    _identity = index_of(identity_endo(_n));
    std::size_t k = _auts.size();
    _compose.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        _compose[i * k + j] = index_of(compose(_auts[i], _auts[j]));
  }

  std::vector<std::vector<Elem>> run()
  {
    State s;
    s.lam.assign(_n, -1);
    s.col_used.assign(_n, 0);
    if (assign(s, _dot.unit(), _identity))
      descend(s);
    std::sort(_found.begin(), _found.end());
    return std::move(_found);
  }

private:
  struct State
  {
    std::vector<int> lam;
    std::vector<std::uint64_t> col_used;
    std::vector<Elem> assigned;
  };

  Elem row_value(int phi, Elem a, Elem b) const { return _dot.mul(a, _auts[phi](b)); }

  bool assign(State &s, Elem a0, int phi0)
  {
    std::vector<std::pair<Elem, int>> queue{{a0, phi0}};
    std::size_t k = _auts.size();

    while (!queue.empty()) {
      auto [x, phi] = queue.back();
      queue.pop_back();
      if (s.lam[x] == phi)
        continue;
      if (s.lam[x] != -1)
        return false;

      for (Elem b = 0; b < _n; ++b) {
        std::uint64_t bit = std::uint64_t{1} << row_value(phi, x, b);
        if (s.col_used[b] & bit)
          return false;
        s.col_used[b] |= bit;
      }
      s.lam[x] = phi;
      s.assigned.push_back(x);

      // lambda_{x o y} = lambda_x lambda_y and lambda_{y o x} = lambda_y lambda_x
      for (Elem y : s.assigned) {
        for (auto [l, r] : {std::pair{x, y}, std::pair{y, x}}) {
          Elem c = row_value(s.lam[l], l, r);
          int want = _compose[s.lam[l] * k + s.lam[r]];
          if (s.lam[c] == -1)
            queue.emplace_back(c, want);
          else if (s.lam[c] != want)
            return false;
        }
      }
    }
    return true;
  }

  void descend(State const &s)
  {
    auto next = std::find(s.lam.begin(), s.lam.end(), -1);
    if (next == s.lam.end()) {
      std::vector<Elem> circ(static_cast<std::size_t>(_n) * _n);
      for (Elem a = 0; a < _n; ++a)
        for (Elem b = 0; b < _n; ++b)
          circ[a * _n + b] = row_value(s.lam[a], a, b);
      _found.push_back(std::move(circ));
      return;
    }
    auto a = static_cast<Elem>(next - s.lam.begin());
    for (int phi = 0; phi < static_cast<int>(_auts.size()); ++phi) {
      State child = s;
      if (assign(child, a, phi))
        descend(child);
    }
  }

  FiniteGroup const &_dot;
  Elem _n;
  std::vector<Endo> _auts;
  std::vector<int> _compose;
  int _identity = 0;
  std::vector<std::vector<Elem>> _found;
};

std::vector<Elem> relabel(std::span<Elem const> table, Elem n, Endo const &phi)
{
  std::vector<Elem> out(table.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      out[phi(a) * n + phi(b)] = phi(table[a * n + b]);
  return out;
}

} // namespace

std::vector<SkewBrace> enumerate_skew_braces(FiniteGroup const &dot,
                                             EnumerationOptions const &opts)
{
  if (dot.order() > opts.max_order || dot.order() > 64)
    throw ValidationError(Errc::OrderTooLarge, "order exceeds enumeration bound",
                          {dot.order(), opts.max_order});

  std::vector<SkewBrace> out;
  for (auto &circ : BraceSearch(dot).run())
    out.push_back(validate_skew_brace(validate_group(dot.order(), std::move(circ), dot.unit()), dot));
  return out;
}

std::optional<std::vector<Elem>> find_brace_isomorphism(SkewBrace const &lhs,
                                                        SkewBrace const &rhs)
{
  Elem n = lhs.order();
  if (rhs.order() != n)
    return std::nullopt;

  std::vector<Elem> phi(n, n);
  std::vector<bool> used(n, false);
  phi[lhs.unit()] = rhs.unit();
  used[rhs.unit()] = true;

  auto consistent = [&](Elem a) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (phi[x] == n || phi[y] == n || (x != a && y != a))
          continue;
        for (auto const *ops : {&lhs.circ(), &lhs.dot()}) {
          FiniteGroup const &other = ops == &lhs.circ() ? rhs.circ() : rhs.dot();
          Elem z = ops->mul(x, y);
          if (phi[z] != n && phi[z] != other.mul(phi[x], phi[y]))
            return false;
        }
      }
    // products landing on a: check from the other side too
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (phi[x] == n || phi[y] == n)
          continue;
        if (lhs.circ().mul(x, y) == a && phi[a] != rhs.circ().mul(phi[x], phi[y]))
          return false;
        if (lhs.dot().mul(x, y) == a && phi[a] != rhs.dot().mul(phi[x], phi[y]))
          return false;
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
      if (consistent(a) && self(self, a + 1))
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

std::vector<std::size_t>
isomorphism_class_representatives(std::vector<SkewBrace> const &braces)
{
  if (braces.empty())
    return {};
  FiniteGroup const &dot = braces.front().dot();
  for (auto const &b : braces)
    if (!(b.dot() == dot))
      throw ValidationError(Errc::OrderMismatch, "braces do not share a dot table");

  auto auts = endomorphism_monoid(dot, true);
  Elem n = dot.order();
  std::map<std::vector<Elem>, std::size_t> seen;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < braces.size(); ++i) {
    std::vector<Elem> key;
    for (auto const &phi : auts) {
      auto t = relabel(braces[i].circ().flat_table(), n, phi);
      if (key.empty() || t < key)
        key = std::move(t);
    }
    if (seen.emplace(std::move(key), i).second)
      reps.push_back(i);
  }
  return reps;
}

} // namespace skb
