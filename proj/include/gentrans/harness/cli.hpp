#pragma once

#include <iosfwd>

namespace gentrans {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 pass, 1 fail, 2 inconclusive, 64 configuration error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gentrans
