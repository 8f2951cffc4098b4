#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vghjudge {

// Command-line entry point, separated from main() so tests can drive it
// in-process. Exit codes: 0 success; 1 lint findings at error severity, or
// any finding under --warn-as-error; 2 input/validation/config errors;
// 3 evaluation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vghjudge
