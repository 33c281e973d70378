#pragma once

#include <ostream>

namespace fpa::cli {

/// Exit status: 0 success, 1 mathematical negative, 2 usage or parse error,
/// 3 internal failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fpa::cli
