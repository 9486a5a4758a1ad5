#ifndef SKB_CLI_HPP
#define SKB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace skb
{

/// Runs the command line (without the program name). Returns 0 when every
/// check passed, 1 when a check failed, 2 on usage or input errors.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace skb

#endif // SKB_CLI_HPP
