#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pipn {

  // Exit codes of run_cli.
  inline constexpr int exit_ok = 0;
  inline constexpr int exit_invalid = 1;
  inline constexpr int exit_failed = 2;
  inline constexpr int exit_fuel = 3;

  // The pip command line; args excludes the program name.
  int run_cli(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
              std::ostream& err);

}  // namespace pipn
