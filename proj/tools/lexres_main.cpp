#include <iostream>
#include <string>
#include <vector>

#include "lexres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lexres::cli::run(args, {std::cin, std::cout, std::cerr});
}
