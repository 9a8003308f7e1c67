#include <iostream>

#include "systolic_cli/run.hpp"

int main(int argc, char** argv) {
  auto parsed = systolic::cli::parse_args(argc, argv);
  if (auto* exit = std::get_if<systolic::cli::ParseExit>(&parsed)) {
    (exit->code == 0 ? std::cout : std::cerr) << exit->message;
    return exit->code;
  }
  return systolic::cli::run(std::get<systolic::cli::RunConfig>(parsed), std::cout, std::cerr);
}
