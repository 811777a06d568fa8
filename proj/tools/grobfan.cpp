#include <iostream>
#include <string>
#include <vector>

#include "grobfan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grobfan::dispatch(args, std::cin, std::cout, std::cerr);
}
