#pragma once

// The `nonleighton` command line.  Exit codes: 0 all checks pass, 1 a check
// failed (witness printed), 2 a resource cap was exceeded, 3 bad input.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace nonleighton {

  enum class OutputFormat { json, dot, text };

  struct Config {
    std::size_t  max_cosets      = 100000;
    std::size_t  low_index_cap   = 6;
    std::size_t  hom_degree_cap  = 6;
    std::size_t  ball_radius_cap = 4;
    OutputFormat format          = OutputFormat::json;
    std::string  out_path;  // empty: standard output
  };

  namespace exit_code {
    inline constexpr int ok           = 0;
    inline constexpr int check_failed = 1;
    inline constexpr int cap_exceeded = 2;
    inline constexpr int bad_input    = 3;
  }  // namespace exit_code

  // args excludes the program name.  Flags take precedence over the NL_*
  // environment variables, which take precedence over the defaults.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace nonleighton
