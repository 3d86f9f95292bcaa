#include <iostream>
#include <string>
#include <vector>

#include "loci/cli.hpp"

int main(int argc, char** argv) {
  return loci::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
