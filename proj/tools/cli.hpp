#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adr::cli {

// Exit codes: 0 success, 1 check failed, 2 invariant violation, 64 usage,
// 65 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace adr::cli
