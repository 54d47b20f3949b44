#include <iostream>

#include "bhk/cli.hpp"

int main(int argc, char** argv) {
  return bhk::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
