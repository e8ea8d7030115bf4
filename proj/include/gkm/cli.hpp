#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm {

/// Entry point behind the gkm executable. Exit codes: 0 success, 1
/// validation or math errors, 2 usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gkm
