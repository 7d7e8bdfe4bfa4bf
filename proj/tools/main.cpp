#include "brocard/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return brocard::cli::dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
