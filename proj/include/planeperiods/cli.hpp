#pragma once

#include <ostream>

namespace planeperiods {

/// Entry point of the `planeperiods` tool. Exit codes: 0 success / Accept,
/// 1 Reject or numerical failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace planeperiods
