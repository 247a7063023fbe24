#include <iostream>
#include <string>
#include <vector>

#include "cyclerep/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return cyclerep::cli::run(args, std::cout, std::cerr);
}
