#include "skb/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace skb::io
{

SchemaError::SchemaError(std::string path, std::string field, std::string const &what)
: std::runtime_error("SchemaError at " + path + " (" + field + "): " + what),
  _path(std::move(path)), _field(std::move(field))
{}

std::string canonical(Json const &j) { return j.dump() + "\n"; }

Json read_json_text(std::string const &text)
{
  try {
    return Json::parse(text);
  }
  catch (Json::parse_error const &e) {
    throw SchemaError("$", "", e.what());
  }
}

Json read_json_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw SchemaError(path.string(), "", "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_json_text(ss.str());
}

void write_json_file(std::filesystem::path const &path, Json const &j)
{
  std::ofstream out(path);
  if (!out)
    throw SchemaError(path.string(), "", "cannot write file");
  out << canonical(j);
}

std::string_view to_string(Kind k)
{
  switch (k) {
  case Kind::group:
    return "group";
  case Kind::brace:
    return "brace";
  case Kind::braiding:
    return "braiding";
  case Kind::pair_map:
    return "pair-map";
  case Kind::reflection:
    return "reflection";
  case Kind::action:
    return "action";
  }
  return "unknown";
}

std::optional<Kind> detect_kind(Json const &j)
{
  if (!j.is_object())
    return std::nullopt;
  if (j.contains("pi"))
    return Kind::action;
  if (j.contains("rhd"))
    return Kind::braiding;
  if (j.contains("dot"))
    return Kind::brace;
  if (j.contains("mul"))
    return Kind::group;
  if (j.contains("k"))
    return Kind::reflection;
  if (j.contains("table"))
    return Kind::pair_map;
  return std::nullopt;
}

namespace
{

Json const &member(Json const &j, char const *key, std::string const &path)
{
  if (!j.is_object())
    throw SchemaError(path, key, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(path, key, "missing member");
  return *it;
}

Elem index_value(Json const &j, std::string const &path, std::string const &field)
{
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::numeric_limits<Elem>::max())
    throw SchemaError(path, field, "expected a non-negative integer");
  return static_cast<Elem>(j.get<std::int64_t>());
}

Elem index_member(Json const &j, char const *key, std::string const &path)
{
  return index_value(member(j, key, path), path + "." + key, key);
}

std::vector<Elem> flat_table(Json const &j, Elem rows, Elem cols, std::string const &path,
                             std::string const &field)
{
  if (!j.is_array() || j.size() != rows)
    throw SchemaError(path, field, "expected " + std::to_string(rows) + " rows");
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (Elem i = 0; i < rows; ++i) {
    std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError(rp, field, "expected " + std::to_string(cols) + " entries");
    for (Elem c = 0; c < cols; ++c)
      out.push_back(index_value(j[i][c], rp + "[" + std::to_string(c) + "]", field));
  }
  return out;
}

std::vector<Elem> table_member(Json const &j, char const *key, Elem rows, Elem cols,
                               std::string const &path)
{
  return flat_table(member(j, key, path), rows, cols, path + "." + key, key);
}

Json rows_of(std::span<Elem const> flat, Elem cols)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < flat.size(); i += cols)
    out.push_back(std::vector<Elem>(flat.begin() + i, flat.begin() + i + cols));
  return out;
}

Json pair_rows(PairMap const &f)
{
  Json out = Json::array();
  for (Elem a = 0; a < f.p(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < f.q(); ++b) {
      auto [u, v] = f(a, b);
      row.push_back({u, v});
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Pair> pair_table(Json const &j, Elem p, Elem q, std::string const &path,
                             char const *field)
{
  if (!j.is_array() || j.size() != p)
    throw SchemaError(path, field, "expected " + std::to_string(p) + " rows");
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(p) * q);
  for (Elem a = 0; a < p; ++a) {
    std::string rp = path + "[" + std::to_string(a) + "]";
    if (!j[a].is_array() || j[a].size() != q)
      throw SchemaError(rp, field, "expected " + std::to_string(q) + " entries");
    for (Elem b = 0; b < q; ++b) {
      std::string ep = rp + "[" + std::to_string(b) + "]";
      auto const &e = j[a][b];
      if (!e.is_array() || e.size() != 2)
        throw SchemaError(ep, field, "expected a pair");
      out.emplace_back(index_value(e[0], ep, field), index_value(e[1], ep, field));
    }
  }
  return out;
}

} // namespace

Json to_json(FiniteGroup const &g)
{
  return {{"size", g.order()}, {"unit", g.unit()}, {"mul", rows_of(g.flat_table(), g.order())}};
}

FiniteGroup parse_group(Json const &j, std::string const &path)
{
  Elem n = index_member(j, "size", path);
  Elem u = index_member(j, "unit", path);
  return validate_group(n, table_member(j, "mul", n, n, path), u);
}

Json to_json(SkewBrace const &b)
{
  Elem n = b.order();
  return {{"size", n},
          {"unit", b.unit()},
          {"circ", rows_of(b.circ().flat_table(), n)},
          {"dot", rows_of(b.dot().flat_table(), n)}};
}

SkewBrace parse_brace(Json const &j, std::string const &path)
{
  Elem n = index_member(j, "size", path);
  Elem u = index_member(j, "unit", path);
  auto circ = table_member(j, "circ", n, n, path);
  auto dot = table_member(j, "dot", n, n, path);
  return validate_skew_brace(validate_group(n, std::move(circ), u),
                             validate_group(n, std::move(dot), u));
}

Json to_json(BraidingOperator const &r)
{
  Elem n = r.order();
  return {{"size", n},
          {"unit", r.circ().unit()},
          {"circ", rows_of(r.circ().flat_table(), n)},
          {"rhd", rows_of(r.rhd_table(), n)},
          {"lhd", rows_of(r.lhd_table(), n)}};
}

BraidingTables parse_braiding_tables(Json const &j, std::string const &path)
{
  Elem n = index_member(j, "size", path);
  Elem u = index_member(j, "unit", path);
  auto circ = validate_group(n, table_member(j, "circ", n, n, path), u);
  return {std::move(circ), table_member(j, "rhd", n, n, path),
          table_member(j, "lhd", n, n, path)};
}

BraidingOperator parse_braiding(Json const &j, std::string const &path)
{
  auto t = parse_braiding_tables(j, path);
  return validate_braiding(std::move(t.circ), std::move(t.rhd), std::move(t.lhd));
}

Json to_json(PairMap const &f)
{
  return {{"p", f.p()}, {"q", f.q()}, {"table", pair_rows(f)}};
}

PairMap parse_pair_map(Json const &j, std::string const &path)
{
  Elem p = index_member(j, "p", path);
  Elem q = index_member(j, "q", path);
  return PairMap(p, q, pair_table(member(j, "table", path), p, q, path + ".table", "table"));
}

Json reflection_to_json(ReflectionMap const &k, GroupAction const *act)
{
  Json out = {{"n", k.p()}, {"m", k.q()}, {"k", pair_rows(k)}};
  if (act)
    out["act"] = rows_of(act->flat_table(), act->set_size());
  return out;
}

ReflectionMap parse_reflection(Json const &j, std::string const &path)
{
  Elem n = index_member(j, "n", path);
  Elem m = index_member(j, "m", path);
  return ReflectionMap(n, m, pair_table(member(j, "k", path), n, m, path + ".k", "k"));
}

std::optional<std::vector<Elem>> parse_reflection_act(Json const &j, std::string const &path)
{
  if (!j.is_object() || !j.contains("act"))
    return std::nullopt;
  Elem n = index_member(j, "n", path);
  Elem m = index_member(j, "m", path);
  return table_member(j, "act", n, m, path);
}

Json to_json(BraceAction const &a)
{
  Json pi = Json::array();
  for (auto const &p : a.pi)
    pi.push_back(p.map);
  return {{"brace", to_json(a.brace)},
          {"set_size", a.set_size()},
          {"act", rows_of(a.circ_act.flat_table(), a.set_size())},
          {"pi", std::move(pi)}};
}

ActionParts parse_action_parts(Json const &j, std::filesystem::path const &base_dir,
                               std::string const &path)
{
  Json const &bj = member(j, "brace", path);
  SkewBrace b = [&] {
    if (bj.is_string())
      return parse_brace(read_json_file(base_dir / bj.get<std::string>()));
    return parse_brace(bj, path + ".brace");
  }();

  Elem n = b.order();
  Elem m = index_member(j, "set_size", path);
  GroupAction act = validate_action(b.circ(), m, table_member(j, "act", n, m, path));
  auto flat = table_member(j, "pi", m, n, path);
  std::vector<Endo> pi;
  for (Elem x = 0; x < m; ++x)
    pi.push_back(Endo{std::vector<Elem>(flat.begin() + x * n, flat.begin() + (x + 1) * n)});
  return {std::move(b), std::move(act), std::move(pi)};
}

BraceAction parse_action(Json const &j, std::filesystem::path const &base_dir,
                         std::string const &path)
{
  auto parts = parse_action_parts(j, base_dir, path);
  return make_brace_action(std::move(parts.brace), std::move(parts.act), std::move(parts.pi));
}

Json to_json(Report const &r)
{
  Json out = Json::array();
  for (auto const &c : r.checks()) {
    Json e = {{"id", c.id}, {"pass", c.passed}};
    if (c.witness)
      e["witness"] = *c.witness;
    if (c.informational)
      e["informational"] = true;
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(SolutionRecord const &s)
{
  return {{"kind", s.kind},
          {"tables", s.tables},
          {"provenance", s.provenance},
          {"checks", to_json(s.checks)}};
}

} // namespace skb::io
