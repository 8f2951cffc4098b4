#include <iostream>
#include <string>
#include <vector>

#include "vghjudge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vghjudge::run_cli(args, std::cout, std::cerr);
}
