#include <string>
#include <vector>

#include "rigi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rigi::cli_main(args);
}
