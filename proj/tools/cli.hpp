#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qshuffle::cli {

// Exit codes: 0 every check passed, 1 some check failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Degree guard: QSHUFFLE_MAX_DEGREE if set and valid, else 8.
int max_degree();

}  // namespace qshuffle::cli
