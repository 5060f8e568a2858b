#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szeta::cli {

enum ExitCode { kOk = 0, kUsage = 2, kAccuracy = 3 };

/// Runs one command line (args[0] is the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1..4", "2,3,5" or "3".
std::vector<int> parse_orders(const std::string& s);

/// "lo:hi:count" (inclusive, evenly spaced) or "v1,v2,...".
std::vector<double> parse_values(const std::string& s);

/// Splices key=value lines from a config file into the argument list after
/// the subcommand; flags given on the command line win.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::string& path);

}  // namespace szeta::cli
