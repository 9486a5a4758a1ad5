#include "skb/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "skb/catalog.hpp"
#include "skb/exhaustive.hpp"
#include "skb/io.hpp"
#include "skb/products.hpp"

namespace skb
{

namespace
{

namespace fs = std::filesystem;
using io::Json;

struct Context
{
  std::ostream &out;
  std::ostream &err;
  bool json = false;
  bool witness = false;
};

int status(Report const &r) { return r.all_passed() ? 0 : 1; }

void print_report(Context const &cx, Report const &r)
{
  for (auto const &c : r.checks()) {
    char const *tag = c.informational ? "INFO" : c.passed ? "PASS" : "FAIL";
    cx.out << tag << "  " << c.id;
    if (c.informational)
      cx.out << (c.passed ? " yes" : " no");
    if (cx.witness && c.witness)
      cx.out << "  witness " << format_witness(*c.witness);
    cx.out << "\n";
  }
}

/// Emits either the record (with --json) or the text report.
int finish(Context const &cx, io::SolutionRecord const &rec)
{
  if (cx.json)
    cx.out << io::canonical(io::to_json(rec));
  else
    print_report(cx, rec.checks);
  return status(rec.checks);
}

void maybe_write(std::string const &path, Json const &j, Context const &cx)
{
  if (path.empty())
    return;
  io::write_json_file(path, j);
  if (!cx.json)
    cx.out << "wrote " << path << "\n";
}

SkewBrace load_brace(std::string const &path) { return io::parse_brace(io::read_json_file(path)); }

BraceAction load_action(std::string const &path)
{
  return io::parse_action(io::read_json_file(path), fs::path(path).parent_path());
}

std::optional<io::Kind> kind_from_name(std::string const &name)
{
  for (auto k : {io::Kind::group, io::Kind::brace, io::Kind::braiding, io::Kind::pair_map,
                 io::Kind::reflection, io::Kind::action})
    if (io::to_string(k) == name)
      return k;
  return std::nullopt;
}

int cmd_validate(Context const &cx, std::string const &file, std::string const &kind_name)
{
  Json j = io::read_json_file(file);
  std::optional<io::Kind> kind = kind_name.empty() ? io::detect_kind(j) : kind_from_name(kind_name);
  if (!kind)
    throw io::SchemaError("$", "", "cannot determine the document kind");
  io::Kind const k = *kind;

  Report rep;
  std::string summary;
  try {
    switch (k) {
    case io::Kind::group: {
      auto g = io::parse_group(j);
      summary = "group of order " + std::to_string(g.order()) +
                (g.is_abelian() ? ", abelian" : ", nonabelian");
      break;
    }
    case io::Kind::brace: {
      auto b = io::parse_brace(j);
      summary = (b.is_brace() ? "brace of order " : "skew brace of order ") +
                std::to_string(b.order());
      break;
    }
    case io::Kind::braiding: {
      auto t = io::parse_braiding_tables(j);
      rep = check_braiding_axioms(t.circ, t.rhd, t.lhd);
      summary = "braiding tables of order " + std::to_string(t.circ.order());
      break;
    }
    case io::Kind::pair_map: {
      auto f = io::parse_pair_map(j);
      auto w = f.injectivity_violation();
      rep.note("Bijective", !w, w);
      summary = "pair map " + std::to_string(f.p()) + " x " + std::to_string(f.q());
      break;
    }
    case io::Kind::reflection: {
      auto km = io::parse_reflection(j);
      auto w = km.injectivity_violation();
      rep.note("Bijective", !w, w);
      summary = "reflection map " + std::to_string(km.p()) + " x " + std::to_string(km.q());
      break;
    }
    case io::Kind::action: {
      auto parts = io::parse_action_parts(j, fs::path(file).parent_path());
      rep = validate_brace_action(parts.brace, parts.act, parts.pi);
      summary = "brace action on " + std::to_string(parts.act.set_size()) + " points";
      break;
    }
    }
  }
  catch (ValidationError const &e) {
    if (cx.json)
      cx.out << io::canonical({{"kind", io::to_string(k)},
                               {"valid", false},
                               {"error", std::string(to_string(e.code()))},
                               {"detail", e.detail()},
                               {"witness", e.witness()}});
    else
      cx.out << "invalid " << io::to_string(k) << ": " << e.what() << "\n";
    return 1;
  }

  if (cx.json) {
    cx.out << io::canonical({{"kind", io::to_string(k)},
                             {"valid", rep.all_passed()},
                             {"summary", summary},
                             {"checks", io::to_json(rep)}});
  }
  else {
    cx.out << summary << "\n";
    print_report(cx, rep);
  }
  return status(rep);
}

int cmd_enumerate(Context const &cx, Elem order, std::string const &group_name,
                  std::string const &group_file, Elem max_order, bool list)
{
  std::vector<catalog::NamedGroup> groups;
  if (!group_file.empty())
    groups.push_back({group_file, io::parse_group(io::read_json_file(group_file))});
  else if (!group_name.empty())
    groups.push_back({group_name, catalog::by_name(group_name)});
  else if (order >= 1 && order <= 8)
    groups = catalog::groups_of_order(order);
  else
    throw ValidationError(Errc::OrderTooLarge, "give --order 1..8, --group or --file", {order});

  EnumerationOptions opts{max_order};
  Json rows = Json::array();
  Json braces = Json::array();
  std::size_t labeled = 0, classes = 0;
  for (auto const &g : groups) {
    auto found = enumerate_skew_braces(g.group, opts);
    auto reps = isomorphism_class_representatives(found);
    labeled += found.size();
    classes += reps.size();
    rows.push_back({{"dot", g.name}, {"labeled", found.size()}, {"classes", reps.size()}});
    if (list)
      for (auto const &b : found)
        braces.push_back(io::to_json(b));
    if (!cx.json)
      cx.out << g.name << ": " << found.size() << " labeled, " << reps.size()
             << " up to isomorphism\n";
  }
  if (cx.json) {
    Json j = {{"groups", rows}, {"labeled", labeled}, {"classes", classes}};
    if (list)
      j["braces"] = braces;
    cx.out << io::canonical(j);
  }
  else {
    cx.out << "total: " << labeled << " labeled, " << classes << " up to isomorphism\n";
    if (list)
      for (auto const &b : braces)
        cx.out << io::canonical(b);
  }
  return 0;
}

int cmd_orbits(Context const &cx, std::string const &file, std::string const &universal)
{
  GroupAction act = [&] {
    if (!universal.empty())
      return universal_action(load_brace(universal)).circ_act;
    return load_action(file).circ_act;
  }();
  auto orbs = orbits(act);
  std::vector<std::size_t> sizes;
  for (auto const &o : orbs)
    sizes.push_back(o.size());
  std::sort(sizes.rbegin(), sizes.rend());

  if (cx.json) {
    cx.out << io::canonical({{"set_size", act.set_size()}, {"sizes", sizes}, {"orbits", orbs}});
    return 0;
  }
  cx.out << "orbit sizes:";
  for (auto s : sizes)
    cx.out << " " << s;
  cx.out << "\n";
  for (auto const &o : orbs) {
    cx.out << "  {";
    for (std::size_t i = 0; i < o.size(); ++i)
      cx.out << (i ? "," : "") << o[i];
    cx.out << "}\n";
  }
  return 0;
}

int cmd_derive_r(Context const &cx, std::string const &file, std::string const &out_path)
{
  auto r = braiding_from_brace(load_brace(file));
  Report rep = check_braiding_axioms(r.circ(), r.rhd_table(), r.lhd_table());
  rep.append(check_braid_relation(r.as_pair_map(), true));
  maybe_write(out_path, io::to_json(r), cx);
  return finish(cx, {"YBE", io::to_json(r),
                     {{"construction", "braiding_from_brace"}, {"base", file}}, rep});
}

int cmd_check_ybe(Context const &cx, std::string const &file)
{
  Json j = io::read_json_file(file);
  auto kind = io::detect_kind(j);
  Report rep;
  Json tables;
  if (kind == io::Kind::braiding || kind == io::Kind::brace) {
    auto t = [&] {
      if (kind == io::Kind::braiding)
        return io::parse_braiding_tables(j);
      auto r = braiding_from_brace(io::parse_brace(j));
      return io::BraidingTables{r.circ(), {r.rhd_table().begin(), r.rhd_table().end()},
                                {r.lhd_table().begin(), r.lhd_table().end()}};
    }();
    rep = check_braiding_axioms(t.circ, t.rhd, t.lhd);
    Elem n = t.circ.order();
    std::vector<Pair> table;
    for (Elem i = 0; i < n * n; ++i)
      table.emplace_back(t.rhd[i], t.lhd[i]);
    PairMap f(n, n, std::move(table));
    rep.append(check_braid_relation(f, true));
    tables = io::to_json(f);
  }
  else if (kind == io::Kind::pair_map) {
    PairMap f = io::parse_pair_map(j);
    rep = check_braid_relation(f, true);
    tables = io::to_json(f);
  }
  else {
    throw io::SchemaError("$", "", "expected a braiding, brace or pair map");
  }
  return finish(cx, {"YBE", tables, {{"construction", "input"}, {"base", file}}, rep});
}

PairMap load_r_pair_map(std::string const &file)
{
  Json j = io::read_json_file(file);
  switch (io::detect_kind(j).value_or(io::Kind::group)) {
  case io::Kind::pair_map:
    return io::parse_pair_map(j);
  case io::Kind::braiding:
    return io::parse_braiding(j).as_pair_map();
  case io::Kind::brace:
    return braiding_from_brace(io::parse_brace(j)).as_pair_map();
  default:
    throw io::SchemaError("$", "", "expected a pair map, braiding or brace");
  }
}

int cmd_check_re(Context const &cx, std::string const &r_file, std::string const &k_file)
{
  PairMap r = load_r_pair_map(r_file);
  ReflectionMap k = io::parse_reflection(io::read_json_file(k_file));
  Report rep = check_reflection_equation(r, k);
  return finish(cx, {"RE",
                     {{"r", io::to_json(r)}, {"k", io::reflection_to_json(k)}},
                     {{"construction", "input"}, {"base", k_file}},
                     rep});
}

int cmd_k_from_pi(Context const &cx, std::string const &file, std::string const &out_path)
{
  BraceAction a = load_action(file);
  ReflectionMap k = k_from_action(a);
  auto r = braiding_from_brace(a.brace);
  auto rep = check_braided_action(r, a.circ_act, k);
  if (!cx.json)
    cx.out << "classification: " << to_string(rep.classification) << "\n";
  Json kj = io::reflection_to_json(k, &a.circ_act);
  maybe_write(out_path, kj, cx);
  return finish(cx, {"RE",
                     {{"r", io::to_json(r)}, {"k", kj}},
                     {{"construction", "k_from_action"}, {"base", file}},
                     rep.report});
}

int cmd_pi_from_k(Context const &cx, std::string const &brace_file, std::string const &k_file,
                  std::string const &out_path)
{
  SkewBrace b = load_brace(brace_file);
  Json kj = io::read_json_file(k_file);
  ReflectionMap k = io::parse_reflection(kj);
  auto rows = io::parse_reflection_act(kj);
  if (!rows)
    throw io::SchemaError("$", "act", "the k file must carry the action table");
  GroupAction act = validate_action(b.circ(), k.q(), std::move(*rows));

  auto rep = check_braided_action(braiding_from_brace(b), act, k);
  if (!rep.braided()) {
    if (!cx.json)
      cx.out << "classification: " << to_string(rep.classification) << "\n";
    return finish(cx, {"RE", kj, {{"construction", "action_from_k"}, {"base", k_file}},
                       rep.report});
  }
  BraceAction a = action_from_k(b, act, k);
  Json aj = io::to_json(a);
  maybe_write(out_path, aj, cx);
  if (cx.json) {
    cx.out << io::canonical({{"action", aj}, {"checks", io::to_json(rep.report)}});
    return 0;
  }
  print_report(cx, rep.report);
  if (out_path.empty())
    cx.out << io::canonical(aj);
  return 0;
}

int cmd_k_squared(Context const &cx, std::string const &file, std::string const &out_path)
{
  Json j = io::read_json_file(file);
  std::optional<SkewBrace> brace;
  BraidingOperator r = [&] {
    if (io::detect_kind(j) == io::Kind::brace) {
      brace = io::parse_brace(j);
      return braiding_from_brace(*brace);
    }
    return io::parse_braiding(j);
  }();
  if (!brace)
    brace = brace_from_braiding(r);

  KSquared ks = k_squared(r);
  auto rep = check_braided_action(r, ks.act, ks.k);
  Report all = rep.report;
  if (rep.braided()) {
    auto extracted = action_from_k(*brace, ks.act, ks.k);
    all.add_flag("PiIsConjugation", extracted.pi == standard_action(*brace).pi);
  }
  if (!cx.json)
    cx.out << "classification: " << to_string(rep.classification) << "\n";
  Json kj = io::reflection_to_json(ks.k, &ks.act);
  maybe_write(out_path, kj, cx);
  return finish(cx, {"RE",
                     {{"r", io::to_json(r)}, {"k", kj}},
                     {{"construction", "k_squared"}, {"base", file}},
                     all});
}

int cmd_amplify(Context const &cx, std::string const &file, unsigned depth,
                std::string const &carry_name, std::string const &out_path)
{
  static std::map<std::string, CarriedAction> const carries{
      {"k", CarriedAction::k}, {"triv", CarriedAction::triv}, {"r", CarriedAction::r}};
  auto it = carries.find(carry_name);
  if (it == carries.end())
    throw io::SchemaError("--carry", carry_name, "expected k, triv or r");

  BraceAction a = load_action(file);
  auto r = braiding_from_brace(a.brace);
  ReflectionMap k = k_from_action(a);
  auto levels = iterate_amplification(r, a.circ_act, k, depth, it->second);

  Report all;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    all.append(levels[i].re, "level" + std::to_string(i) + ".");
    if (!cx.json)
      cx.out << "level " << i << ": |X| = " << levels[i].k.q() << ", reflection equation "
             << (levels[i].re.passed("EqRE") ? "holds" : "fails") << "\n";
  }
  auto const &top = levels.back();
  io::SolutionRecord rec{"RE",
                         {{"r", io::to_json(r.as_pair_map())},
                          {"k", io::reflection_to_json(top.k, &top.act)}},
                         {{"construction", "amplification"},
                          {"carry", carry_name},
                          {"depth", depth},
                          {"base", file}},
                         all};
  maybe_write(out_path, io::to_json(rec), cx);
  return finish(cx, rec);
}

int cmd_fixed_endos(Context const &cx, std::string const &file)
{
  SkewBrace b = load_brace(file);
  auto endos = endomorphism_monoid(b.dot());
  auto fixed = fixed_endomorphisms(b);
  Json list = Json::array();
  for (auto const &f : fixed) {
    auto idx = std::lower_bound(endos.begin(), endos.end(), f) - endos.begin();
    list.push_back({{"index", idx}, {"map", f.map}});
  }
  if (cx.json) {
    cx.out << io::canonical({{"endomorphisms", endos.size()}, {"fixed", list}});
    return 0;
  }
  cx.out << fixed.size() << " of " << endos.size() << " endomorphisms are fixed\n";
  for (auto const &e : list)
    cx.out << "  #" << e["index"].get<long>() << " " << e["map"].dump() << "\n";
  return 0;
}

int cmd_validate_action(Context const &cx, std::string const &file)
{
  auto parts = io::parse_action_parts(io::read_json_file(file), fs::path(file).parent_path());
  Report rep = validate_brace_action(parts.brace, parts.act, parts.pi);
  if (cx.json)
    cx.out << io::canonical({{"valid", rep.all_passed()}, {"checks", io::to_json(rep)}});
  else
    print_report(cx, rep);
  return status(rep);
}

int cmd_construct(Context const &cx, std::string const &which, std::string const &file,
                  std::string const &out_path)
{
  SkewBrace b = load_brace(file);
  BraceAction a = [&] {
    if (which == "universal")
      return universal_action(b);
    if (which == "standard")
      return standard_action(b);
    if (which == "trivial")
      return trivial_extension(b, left_translation(b.circ()));
    throw io::SchemaError("construct", which, "expected universal, standard or trivial");
  }();
  Json j = io::to_json(a);
  if (out_path.empty())
    cx.out << io::canonical(j);
  else
    maybe_write(out_path, j, cx);
  return 0;
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Finite skew braces, braiding operators and reflection maps", "skb"};
  app.require_subcommand(1);

  Context cx{out, err};
  unsigned threads = 0;
  app.add_flag("--json", cx.json, "Emit machine-readable JSON");
  app.add_flag("--witness", cx.witness, "Print counterexample tuples");
  app.add_option("--threads", threads, "Worker threads for exhaustive checks");

  std::string file, file2, out_path, kind, group_name, universal, carry = "k", which;
  Elem order = 0, max_order = 8;
  unsigned depth = 1;
  bool list = false;

  std::function<int()> action;
  auto sub = [&](char const *name, char const *desc, std::function<int()> fn) {
    auto *s = app.add_subcommand(name, desc);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto *validate = sub("validate", "Validate a JSON document of any kind",
                       [&] { return cmd_validate(cx, file, kind); });
  validate->add_option("file", file)->required();
  validate->add_option("--kind", kind, "group, brace, braiding, pair-map, reflection, action");

  auto *enumerate = sub("enumerate", "Enumerate skew braces with a given additive group", [&] {
    return cmd_enumerate(cx, order, group_name, file, max_order, list);
  });
  enumerate->add_option("--order", order, "All groups of this order (1..8)");
  enumerate->add_option("--group", group_name, "Named group, e.g. S3, Z2xZ2, Q8");
  enumerate->add_option("--file", file, "Group JSON file");
  enumerate->add_option("--max-order", max_order, "Refuse larger groups");
  enumerate->add_flag("--list", list, "Print every brace found");

  auto *orbs = sub("orbits", "Orbit decomposition of an action",
                   [&] { return cmd_orbits(cx, file, universal); });
  orbs->add_option("file", file, "Action JSON file");
  orbs->add_option("--universal", universal, "Brace JSON file; use its universal action");

  auto *derive = sub("derive-r", "Braiding operator of a skew brace",
                     [&] { return cmd_derive_r(cx, file, out_path); });
  derive->add_option("brace", file)->required();
  derive->add_option("-o,--output", out_path);

  auto *ybe = sub("check-ybe", "Check braiding axioms and the braid relation",
                  [&] { return cmd_check_ybe(cx, file); });
  ybe->add_option("file", file)->required();

  auto *re = sub("check-re", "Check the reflection equation",
                 [&] { return cmd_check_re(cx, file, file2); });
  re->add_option("r", file, "Pair map, braiding or brace JSON")->required();
  re->add_option("k", file2, "Reflection map JSON")->required();

  auto *kpi = sub("k-from-pi", "Reflection map of a brace action",
                  [&] { return cmd_k_from_pi(cx, file, out_path); });
  kpi->add_option("action", file)->required();
  kpi->add_option("-o,--output", out_path);

  auto *pik = sub("pi-from-k", "Brace action of a braided reflection map",
                  [&] { return cmd_pi_from_k(cx, file, file2, out_path); });
  pik->add_option("brace", file)->required();
  pik->add_option("k", file2, "Reflection map JSON with an act table")->required();
  pik->add_option("-o,--output", out_path);

  auto *ksq = sub("k-squared", "k = r^2 on A x A",
                  [&] { return cmd_k_squared(cx, file, out_path); });
  ksq->add_option("file", file, "Brace or braiding JSON")->required();
  ksq->add_option("-o,--output", out_path);

  auto *amp = sub("amplify", "Iterated product solutions of the reflection equation",
                  [&] { return cmd_amplify(cx, file, depth, carry, out_path); });
  amp->add_option("action", file)->required();
  amp->add_option("--depth", depth)->required();
  amp->add_option("--carry", carry, "Action carried upward: k, triv or r");
  amp->add_option("-o,--output", out_path);

  auto *fixed = sub("fixed-endos", "Endomorphisms fixed by the diamond action",
                    [&] { return cmd_fixed_endos(cx, file); });
  fixed->add_option("brace", file)->required();

  auto *vact = sub("validate-action", "Check the brace-action conditions",
                   [&] { return cmd_validate_action(cx, file); });
  vact->add_option("action", file)->required();

  auto *cons = sub("construct", "Write the universal, standard or trivial action of a brace",
                   [&] { return cmd_construct(cx, which, file, out_path); });
  cons->add_option("which", which, "universal, standard or trivial")->required();
  cons->add_option("brace", file)->required();
  cons->add_option("-o,--output", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0)
    set_worker_count(threads);

  try {
    return action();
  }
  catch (io::SchemaError const &e) {
    err << e.what() << "\n";
  }
  catch (ValidationError const &e) {
    err << "input error: " << e.what() << "\n";
  }
  catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

} // namespace skb
