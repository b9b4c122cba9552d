#include "nefcone/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return nefcone::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
