#include <iostream>

#include "niep/cli.hpp"

int main(int argc, char** argv) {
  const auto response = niep::cli::run_command_line(argc - 1, argv + 1);
  auto& stream = response.exit_code >= niep::cli::kExitParse ? std::cerr : std::cout;
  stream << response.output;
  return response.exit_code;
}
