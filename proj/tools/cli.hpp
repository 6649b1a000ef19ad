#pragma once

#include <ostream>

namespace gcorr::cli {

// Runs one subcommand. Exit codes: 0 the property holds / artifact written,
// 1 well-formed input but the property fails, 2 malformed input or internal
// error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcorr::cli
