#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcd {

// Command-line entry point with explicit streams so tests can drive it in-process.
// Exit codes: 0 ok, 1 negative answer (invalid certificate, not a skeleton), 2 error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pcd
