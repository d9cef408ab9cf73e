#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqob {

/// Runs one eqob command. `args` excludes the program name; `env_budget` is
/// the value of EQOB_BUDGET (nullptr when unset). Exit codes: 0 success,
/// 2 invalid input, 1 budget exceeded, 3 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* env_budget = nullptr);

}  // namespace eqob
