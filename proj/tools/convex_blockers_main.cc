#include <iostream>
#include <string>
#include <vector>

#include "convex_blockers/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return convex_blockers::RunCli(args, std::cout, std::cerr);
}
