#include <string>
#include <vector>

#include "hubnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hubnet::run_cli(args);
}
