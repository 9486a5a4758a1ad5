#ifndef SKB_REPORT_HPP
#define SKB_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skb/error.hpp"

namespace skb
{

struct CheckResult
{
  std::string id;
  bool passed = true;
  std::optional<Witness> witness;  // present iff !passed (and a tuple exists)
  bool informational = false;      // excluded from all_passed()
};

/// Ordered list of named checks. Checkers return these instead of throwing.
class Report
{
public:
  void add(std::string id, std::optional<Witness> violation);
  void add_flag(std::string id, bool passed);
  void note(std::string id, bool value, std::optional<Witness> witness = {});
  void append(Report const &other, std::string_view prefix = {});

  bool all_passed() const;
  bool passed(std::string_view id) const;
  CheckResult const *find(std::string_view id) const;
  std::vector<CheckResult> const &checks() const { return _checks; }

  /// Failed non-informational checks.
  std::vector<CheckResult> failures() const;

private:
  std::vector<CheckResult> _checks;
};

} // namespace skb

#endif // SKB_REPORT_HPP
