#include <iostream>
#include <string>
#include <vector>

#include "dyncore/cli.hpp"

int main(int argc, char** argv) {
  return dyncore::cli::run(std::vector<std::string>(argv, argv + argc), std::cout,
                           std::cerr);
}
