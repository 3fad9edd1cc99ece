#pragma once

// JSON forms of coset tables and homomorphisms.  Actions are 1-based:
//   {"n": 2, "action": {"c": [2, 1], "d": [1, 2]}}

#include <string>
#include <vector>

#include "nonleighton/enumerate.hpp"

namespace nonleighton {

  std::string table_to_json(CosetTable const& t, bool pretty = true);
  std::string tables_to_json(std::vector<CosetTable> const& ts);
  // Inverse of table_to_json; generators are taken in key order of "action"
  // unless `generators` is given.  Throws InputError on malformed input.
  CosetTable table_from_json(std::string const& text, std::vector<char> generators = {});

  std::string hom_to_json(Homomorphism const& h, bool pretty = true);
  std::string homs_to_json(std::vector<Homomorphism> const& hs);

}  // namespace nonleighton
