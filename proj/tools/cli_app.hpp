#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lietype {

// Runs one CLI invocation.  The stable report document goes to `out`;
// usage errors and timing notes go to `err`.  Exit codes: 0 every claim
// passed, 1 a claim failed, 2 usage/parameter error or budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lietype
