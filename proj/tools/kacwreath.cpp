#include <iostream>

#include "kacwreath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const kw::CliResult r = kw::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
