#include "skb/report.hpp"

#include <algorithm>

namespace skb
{

void Report::add(std::string id, std::optional<Witness> violation)
{
  bool ok = !violation.has_value();
  _checks.push_back({std::move(id), ok, std::move(violation), false});
}

void Report::add_flag(std::string id, bool passed)
{
  _checks.push_back({std::move(id), passed, std::nullopt, false});
}

void Report::note(std::string id, bool value, std::optional<Witness> witness)
{
  _checks.push_back({std::move(id), value, std::move(witness), true});
}

void Report::append(Report const &other, std::string_view prefix)
{
  for (auto c : other._checks) {
    c.id = std::string(prefix) + c.id;
    _checks.push_back(std::move(c));
  }
}

bool Report::all_passed() const
{
  return std::all_of(_checks.begin(), _checks.end(),
                     [](CheckResult const &c) { return c.informational || c.passed; });
}

CheckResult const *Report::find(std::string_view id) const
{
  for (auto const &c : _checks)
    if (c.id == id)
      return &c;
  return nullptr;
}

bool Report::passed(std::string_view id) const
{
  auto const *c = find(id);
  return c && c->passed;
}

std::vector<CheckResult> Report::failures() const
{
  std::vector<CheckResult> out;
  for (auto const &c : _checks)
    if (!c.informational && !c.passed)
      out.push_back(c);
  return out;
}

} // namespace skb
