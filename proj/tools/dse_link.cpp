#include <iostream>
#include <string>
#include <vector>

#include "dselink/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dselink::cli::run(args, std::cout, std::cerr);
}
