#include <doctest.h>

#include <fstream>
#include <sstream>

#include "nonleighton/words.hpp"

using namespace nonleighton;

TEST_CASE("builtins match the relator fixture") {
  std::ifstream in(NONLEIGHTON_FIXTURE_DIR "/builtin_relators.txt");
  REQUIRE(in);
  std::string line;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    auto const tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    std::string const name = line.substr(0, tab);
    CAPTURE(name);
    CHECK(builtin(name) == parse_presentation(line.substr(tab + 1)));
    ++seen;
  }
  CHECK(seen == builtin_names().size());
}
