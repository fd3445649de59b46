#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zonotopal {

// Exit codes: 0 success, 1 usage, 2 domain error, 3 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zonotopal
