#pragma once

// Command-line front end. run() takes the arguments after the program name
// and returns the process exit code: 0 success, 2 validation error,
// 3 numeric error. Errors go to `err` as a one-line JSON object.

#include <iosfwd>
#include <string>
#include <vector>

namespace sixjvol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixjvol::cli
