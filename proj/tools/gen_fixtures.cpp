// Writes the relator fixture: one line per built-in presentation, with every
// relator spelled out by the word constructors.
//
//   gen_fixtures [OUTPUT]

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "nonleighton/words.hpp"

using namespace nonleighton;

namespace {

  Word w(char const* s) {
    return Word(s);
  }

  std::vector<std::pair<std::string, Presentation>> fixtures() {
    Word const h    = commutator(conjugate(w("c"), w("d")), w("c"));
    Word const bs   = free_reduce(conjugate(power(w("c"), 3), w("d")) + power(w("c"), -5));
    Word const ae3  = free_reduce(power(w("e"), 3) + power(w("c"), -5));
    return {
        {"bs35", Presentation({'c', 'd'}, {bs})},
        {"h_plus", Presentation({'a', 'c', 'd'}, {special_relator(h, 1), bs})},
        {"h_minus", Presentation({'a', 'c', 'd'}, {special_relator(h, -1), bs})},
        {"torus", Presentation({'a', 'b'}, {commutator(w("a"), w("b"))})},
        {"klein", Presentation({'a', 'b'}, {free_reduce(conjugate(w("a"), w("b")) + w("a"))})},
        {"groupA", Presentation({'c', 'e'}, {commutator(w("e"), w("c")), ae3})},
        {"groupQ",
         Presentation({'c', 'e', 'd'},
                      {commutator(w("e"), w("c")), ae3,
                       free_reduce(conjugate(w("c"), w("d")) + invert(w("e")))})},
    };
  }

}  // namespace

int main(int argc, char* argv[]) {
  std::ofstream file;
  if (argc > 1) {
    file.open(argv[1]);
    if (!file) {
      std::cerr << "cannot write " << argv[1] << '\n';
      return 3;
    }
  }
  std::ostream& out = argc > 1 ? file : std::cout;
  for (auto const& [name, p] : fixtures()) {
    out << name << '\t' << to_string(p) << '\n';
  }
  return 0;
}
