#include <iostream>
#include <string>
#include <vector>

#include "bsl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bsl::cli::dispatch(args, std::cout, std::cerr);
}
