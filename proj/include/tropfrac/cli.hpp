#pragma once

#include <ostream>

namespace tropfrac {

// Exit codes: 0 optimal / accepted, 1 usage or input error, 2 infeasible,
// 3 unbounded, 4 certificate rejected.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropfrac
