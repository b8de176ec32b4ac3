#pragma once

#include <iosfwd>

namespace posmap::cli {

// Exit codes: 0 all criteria passed (or command succeeded), 1 a criterion was violated, 2 error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posmap::cli
