#include <iostream>

#include "multinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return multinv::run(args, std::cout, std::cerr);
}
