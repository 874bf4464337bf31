#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "greenp/cli/commands.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("GREENP_SEED")) env_seed = s;
  return greenp::cli::run(argc, argv, std::cout, std::cerr, env_seed);
}
