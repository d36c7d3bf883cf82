#include "urbip/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return urbip::cliMain({argv + 1, argv + argc}, std::cout, std::cerr);
}
