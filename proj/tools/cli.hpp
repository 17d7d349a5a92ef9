#pragma once

#include <iosfwd>

namespace lbi {

/// Entry point of the lbi command, with the streams injected so tests can run
/// it in process. Returns the exit status: 0 success, 1 verification failure,
/// 2 input error, 3 budget exhaustion.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lbi
