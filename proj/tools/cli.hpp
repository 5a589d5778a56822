#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sset::cli {

/// Exit codes: 0 holds/succeeded, 1 check failed, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sset::cli
