#pragma once

#include <ostream>

namespace scfe {

// Exit codes: 0 drawable / valid, 1 not drawable / invalid, 2 usage or input error,
// 3 internal verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scfe
