#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> cap_env;
  if (const char* v = std::getenv("COLLATZ_CAP")) {
    cap_env = v;
  }
  return collatz::cli::run(args, std::cout, std::cerr, cap_env);
}
