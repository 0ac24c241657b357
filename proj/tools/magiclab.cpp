#include <string>
#include <vector>

#include "magiclab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return magiclab::run_cli(args);
}
