#include <cstdlib>
#include <iostream>

#include "echcap_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  echcap::cli::Environment env;
  if (const char* v = std::getenv("ECHCAP_NODE_LIMIT")) env.node_limit = v;
  return echcap::cli::run(args, std::cout, std::cerr, env);
}
