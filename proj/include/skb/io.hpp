#ifndef SKB_IO_HPP
#define SKB_IO_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "skb/brace_action.hpp"
#include "skb/braiding.hpp"
#include "skb/reflection.hpp"
#include "skb/report.hpp"

namespace skb::io
{

using Json = nlohmann::json;

/// Malformed document: `path` locates the offending value ("$.circ[2]"),
/// `field` names the missing or mistyped member.
class SchemaError : public std::runtime_error
{
public:
  SchemaError(std::string path, std::string field, std::string const &what);

  std::string const &path() const noexcept { return _path; }
  std::string const &field() const noexcept { return _field; }

private:
  std::string _path;
  std::string _field;
};

/// Sorted keys, no whitespace, trailing newline.
std::string canonical(Json const &j);

Json read_json_text(std::string const &text);
Json read_json_file(std::filesystem::path const &path);
void write_json_file(std::filesystem::path const &path, Json const &j);

enum class Kind
{
  group,
  brace,
  braiding,
  pair_map,
  reflection,
  action
};

std::string_view to_string(Kind k);

/// Guess the document kind from its members.
std::optional<Kind> detect_kind(Json const &j);

// group: {"size", "unit", "mul"}
Json to_json(FiniteGroup const &g);
FiniteGroup parse_group(Json const &j, std::string const &path = "$");

// brace: {"size", "unit", "circ", "dot"}
Json to_json(SkewBrace const &b);
SkewBrace parse_brace(Json const &j, std::string const &path = "$");

/// Unvalidated braiding tables together with the group they act on.
struct BraidingTables
{
  FiniteGroup circ;
  std::vector<Elem> rhd;
  std::vector<Elem> lhd;
};

// braiding: {"size", "unit", "circ", "rhd", "lhd"}
Json to_json(BraidingOperator const &r);
BraidingTables parse_braiding_tables(Json const &j, std::string const &path = "$");
BraidingOperator parse_braiding(Json const &j, std::string const &path = "$");

// pair map: {"p", "q", "table"}, table[a][b] = [a', b']
Json to_json(PairMap const &f);
PairMap parse_pair_map(Json const &j, std::string const &path = "$");

// reflection map: {"n", "m", "k"} plus optional "act" (rows of the action)
Json reflection_to_json(ReflectionMap const &k, GroupAction const *act = nullptr);
ReflectionMap parse_reflection(Json const &j, std::string const &path = "$");
std::optional<std::vector<Elem>> parse_reflection_act(Json const &j,
                                                      std::string const &path = "$");

// action: {"brace", "set_size", "act", "pi"}; "brace" is inline or a path
// relative to `base_dir`
Json to_json(BraceAction const &a);

/// The action's tables, with brace and (A, o)-action validated but pi not
/// yet checked against the brace-action conditions.
struct ActionParts
{
  SkewBrace brace;
  GroupAction act;
  std::vector<Endo> pi;
};

ActionParts parse_action_parts(Json const &j, std::filesystem::path const &base_dir = {},
                               std::string const &path = "$");
BraceAction parse_action(Json const &j, std::filesystem::path const &base_dir = {},
                         std::string const &path = "$");

Json to_json(Report const &r);

struct SolutionRecord
{
  std::string kind;  // "YBE" or "RE"
  Json tables;
  Json provenance;
  Report checks;
};

Json to_json(SolutionRecord const &s);

} // namespace skb::io

#endif // SKB_IO_HPP
