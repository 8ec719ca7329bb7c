#include <iostream>
#include <string>
#include <vector>

#include "iconrate/cli.hpp"

int main(int argc, char** argv) {
  return iconrate::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
