#include <iostream>
#include <string>
#include <vector>

#include "gonseq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return gonseq::cli::run(args, std::cout, std::cerr);
}
