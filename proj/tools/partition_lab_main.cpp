#include <string>
#include <vector>

#include "partition_lab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return partition_lab::cli::run(args);
}
