#include <iostream>

#include "orbitcert/cli.hpp"

int main(int argc, char** argv) {
  int exit_code = 0;
  auto config = orbitcert::parse_command_line(argc, argv, std::cout, std::cerr, exit_code);
  if (!config) return exit_code;
  return orbitcert::run(*config, std::cout, std::cerr);
}
