#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scott::cli {

// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kError = 1,       // usage, I/O, parse or type error
  kOutOfFuel = 2,
  kStuck = 3,
  kCheckFailed = 4, // a law check or adequacy comparison disagreed
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scott::cli
