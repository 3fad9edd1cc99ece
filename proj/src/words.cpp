#include "nonleighton/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "nonleighton/errors.hpp"

namespace nonleighton {

  bool is_generator_symbol(char ch) noexcept {
    return ch >= 'a' && ch <= 'z';
  }

  bool is_letter_symbol(char ch) noexcept {
    return is_generator_symbol(ch) || (ch >= 'A' && ch <= 'Z');
  }

  char inverse_symbol(char ch) noexcept {
    return is_generator_symbol(ch) ? static_cast<char>(ch - 'a' + 'A')
                                   : static_cast<char>(ch - 'A' + 'a');
  }

  Letter letter_from_symbol(char ch) {
    if (is_generator_symbol(ch)) {
      return {ch, 1};
    }
    if (ch >= 'A' && ch <= 'Z') {
      return {static_cast<char>(ch - 'A' + 'a'), -1};
    }
    throw InputError(std::string("not a letter: '") + ch + "'");
  }

  char Letter::symbol() const noexcept {
    return sign > 0 ? generator : inverse_symbol(generator);
  }

  Word::Word(std::string_view text) : _letters(text) {
    for (char ch : _letters) {
      if (!is_letter_symbol(ch)) {
        throw InputError("invalid character in word \"" + _letters + "\"");
      }
    }
  }

  bool Word::is_freely_reduced() const noexcept {
    for (std::size_t i = 1; i < _letters.size(); ++i) {
      if (_letters[i] == inverse_symbol(_letters[i - 1])) {
        return false;
      }
    }
    return true;
  }

  Word& Word::append(Word const& other) {
    _letters += other._letters;
    return *this;
  }

  Word& Word::push_back(Letter l) {
    _letters.push_back(l.symbol());
    return *this;
  }

  Word free_reduce(Word const& w) {
    // Stack reduction; the result is the unique reduced representative.
    std::string out;
    out.reserve(w.size());
    for (char ch : w.str()) {
      if (!out.empty() && out.back() == inverse_symbol(ch)) {
        out.pop_back();
      } else {
        out.push_back(ch);
      }
    }
    return Word(out);
  }

  Word cyclic_reduce(Word const& w) {
    std::string const s     = free_reduce(w).str();
    std::size_t       first = 0;
    std::size_t       last  = s.size();
    while (last - first >= 2 && s[first] == inverse_symbol(s[last - 1])) {
      ++first;
      --last;
    }
    return Word(std::string_view(s).substr(first, last - first));
  }

  Word invert(Word const& w) {
    std::string out(w.str().rbegin(), w.str().rend());
    std::transform(out.begin(), out.end(), out.begin(), inverse_symbol);
    return Word(out);
  }

  Word conjugate(Word const& x, Word const& y) {
    return free_reduce(invert(y) + x + y);
  }

  Word power(Word const& x, long k) {
    Word const base = k < 0 ? invert(x) : x;
    Word       out;
    for (long i = 0; i < std::labs(k); ++i) {
      out.append(base);
    }
    return free_reduce(out);
  }

  Word commutator(Word const& x, Word const& y) {
    return free_reduce(invert(x) + invert(y) + x + y);
  }

  long exponent_sum(Word const& w, char generator) noexcept {
    long sum = 0;
    for (char ch : w.str()) {
      if (ch == generator) {
        ++sum;
      } else if (ch == inverse_symbol(generator)) {
        --sum;
      }
    }
    return sum;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(std::vector<char> generators,
                             std::vector<Word> relators)
      : _generators(std::move(generators)) {
    std::set<char> seen;
    for (char g : _generators) {
      if (!is_generator_symbol(g)) {
        throw InputError(std::string("generator must be a lowercase letter, "
                                     "got '")
                         + g + "'");
      }
      if (!seen.insert(g).second) {
        throw InputError(std::string("duplicate generator '") + g + "'");
      }
    }
    _relators.reserve(relators.size());
    for (auto const& r : relators) {
      for (char ch : r.str()) {
        if (!seen.count(letter_from_symbol(ch).generator)) {
          throw InputError(std::string("relator \"") + r.str()
                           + "\" uses undeclared letter '" + ch + "'");
        }
      }
      _relators.push_back(free_reduce(r));
    }
  }

  int Presentation::index_of(char generator) const noexcept {
    auto it = std::find(_generators.begin(), _generators.end(), generator);
    return it == _generators.end()
               ? -1
               : static_cast<int>(it - _generators.begin());
  }

  namespace {

    class Scanner {
     public:
      explicit Scanner(std::string_view text) : _text(text) {}

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          advance();
        }
      }

      bool at_end() {
        skip_space();
        return _pos >= _text.size();
      }

      char peek() {
        skip_space();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void expect(char ch) {
        if (peek() != ch) {
          fail(std::string("expected '") + ch + "'");
        }
        advance();
      }

      char generator() {
        char ch = peek();
        if (!is_generator_symbol(ch)) {
          fail("expected a lowercase generator letter");
        }
        advance();
        return ch;
      }

      std::string word() {
        skip_space();
        std::string out;
        while (_pos < _text.size() && is_letter_symbol(_text[_pos])) {
          out.push_back(_text[_pos]);
          advance();
        }
        if (out.empty()) {
          fail("expected a word");
        }
        return out;
      }

      [[noreturn]] void fail(std::string const& what) const {
        std::string found = _pos < _text.size()
                                ? std::string("'") + _text[_pos] + "'"
                                : std::string("end of input");
        throw ParseError(what + ", found " + found, _line, _column);
      }

      std::size_t line() const {
        return _line;
      }
      std::size_t column() const {
        return _column;
      }

     private:
      void advance() {
        if (_text[_pos] == '\n') {
          ++_line;
          _column = 1;
        } else {
          ++_column;
        }
        ++_pos;
      }

      std::string_view _text;
      std::size_t      _pos    = 0;
      std::size_t      _line   = 1;
      std::size_t      _column = 1;
    };

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    Scanner           in(text);
    std::vector<char> gens;
    std::set<char>    declared;

    in.expect('<');
    while (true) {
      in.skip_space();
      std::size_t line = in.line(), col = in.column();
      char        g    = in.generator();
      if (!declared.insert(g).second) {
        throw ParseError(std::string("duplicate generator '") + g + "'",
                         line,
                         col);
      }
      gens.push_back(g);
      if (in.peek() != ',') {
        break;
      }
      in.expect(',');
    }
    in.expect('|');

    std::vector<Word> relators;
    if (in.peek() != '>') {
      while (true) {
        in.skip_space();
        std::size_t line = in.line(), col = in.column();
        std::string w    = in.word();
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (!declared.count(letter_from_symbol(w[i]).generator)) {
            throw ParseError(std::string("undeclared letter '") + w[i] + "'",
                             line,
                             col + i);
          }
        }
        relators.emplace_back(w);
        if (in.peek() != ',') {
          break;
        }
        in.expect(',');
      }
    }
    in.expect('>');
    if (!in.at_end()) {
      in.fail("trailing input after '>'");
    }
    return Presentation(std::move(gens), std::move(relators));
  }

  std::string to_string(Presentation const& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.generators().size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += p.generators()[i];
    }
    out += " |";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      out += i == 0 ? " " : ", ";
      out += p.relators()[i].str();
    }
    out += " >";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Builtins
  ////////////////////////////////////////////////////////////////////////

  Word commutator_h() {
    Word const c("c"), d("d");
    return commutator(conjugate(c, d), c);
  }

  Word special_relator(Word const& h, int epsilon) {
    Word const a("a");
    return free_reduce(invert(h) + a + h + power(a, -epsilon));
  }

  Presentation amalgamate_with_loop(Presentation const& base,
                                    Word const&         h,
                                    int                 epsilon) {
    if (epsilon != 1 && epsilon != -1) {
      throw InputError("epsilon must be +1 or -1");
    }
    std::vector<char> gens{'a'};
    gens.insert(gens.end(), base.generators().begin(), base.generators().end());
    std::vector<Word> rels{special_relator(h, epsilon)};
    rels.insert(rels.end(), base.relators().begin(), base.relators().end());
    return Presentation(std::move(gens), std::move(rels));
  }

  std::vector<std::string> const& builtin_names() {
    static std::vector<std::string> const names{
        "bs35", "h_plus", "h_minus", "torus", "klein", "groupA", "groupQ"};
    return names;
  }

  Presentation builtin(std::string_view name) {
    Word const a("a"), b("b"), c("c"), d("d"), e("e");
    // d^-1 c^3 d c^-5
    Word const bs_relator = free_reduce(conjugate(power(c, 3), d) + power(c, -5));
    Presentation const bs35({'c', 'd'}, {bs_relator});

    if (name == "bs35") {
      return bs35;
    } else if (name == "h_plus") {
      return amalgamate_with_loop(bs35, commutator_h(), 1);
    } else if (name == "h_minus") {
      return amalgamate_with_loop(bs35, commutator_h(), -1);
    } else if (name == "torus") {
      return Presentation({'a', 'b'}, {commutator(a, b)});
    } else if (name == "klein") {
      // a^b = a^-1
      return Presentation({'a', 'b'}, {free_reduce(conjugate(a, b) + a)});
    } else if (name == "groupA") {
      return Presentation({'c', 'e'},
                          {commutator(e, c), free_reduce(power(e, 3)
                                                         + power(c, -5))});
    } else if (name == "groupQ") {
      return Presentation({'c', 'e', 'd'},
                          {commutator(e, c),
                           free_reduce(power(e, 3) + power(c, -5)),
                           free_reduce(conjugate(c, d) + invert(e))});
    }
    throw InputError("unknown builtin presentation \"" + std::string(name)
                     + "\"");
  }

}  // namespace nonleighton
