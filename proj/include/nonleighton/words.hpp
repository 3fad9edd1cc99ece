#pragma once

// Words over a free group on lowercase letters.  A word is stored in its text
// encoding: a lowercase letter is a generator, the matching uppercase letter
// its inverse ("A" = a^-1).

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nonleighton {

  struct Letter {
    char generator;  // 'a'..'z'
    int  sign;       // +1 or -1

    char symbol() const noexcept;
    Letter inverse() const noexcept {
      return {generator, -sign};
    }
    friend bool operator==(Letter, Letter) = default;
  };

  bool is_generator_symbol(char ch) noexcept;
  bool is_letter_symbol(char ch) noexcept;
  Letter letter_from_symbol(char ch);
  char inverse_symbol(char ch) noexcept;

  class Word {
   public:
    Word() = default;
    // Accepts [A-Za-z]*; anything else throws InputError.
    explicit Word(std::string_view text);

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return letter_from_symbol(_letters[i]);
    }
    char symbol(std::size_t i) const {
      return _letters[i];
    }
    std::string const& str() const noexcept {
      return _letters;
    }

    // No adjacent pair x x^-1.
    bool is_freely_reduced() const noexcept;

    // Plain concatenation, no reduction.
    Word& append(Word const& other);
    Word& push_back(Letter l);

    friend Word operator+(Word lhs, Word const& rhs) {
      return lhs.append(rhs);
    }
    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::string _letters;
  };

  Word free_reduce(Word const& w);
  Word cyclic_reduce(Word const& w);

  Word invert(Word const& w);
  // y^-1 x y
  Word conjugate(Word const& x, Word const& y);
  Word power(Word const& x, long k);
  // x^-1 y^-1 x y
  Word commutator(Word const& x, Word const& y);

  // Sum of exponents of `generator` in w.
  long exponent_sum(Word const& w, char generator) noexcept;

  class Presentation {
   public:
    Presentation() = default;
    // Relators are freely reduced on construction.  Throws InputError on a
    // duplicate generator or a relator letter that is not a generator.
    Presentation(std::vector<char> generators, std::vector<Word> relators);

    std::vector<char> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::size_t rank() const noexcept {
      return _generators.size();
    }
    // Position of `generator` in the generator list, or -1.
    int index_of(char generator) const noexcept;
    bool has_generator(char generator) const noexcept {
      return index_of(generator) >= 0;
    }

    friend bool operator==(Presentation const&,
                           Presentation const&) = default;

   private:
    std::vector<char> _generators;
    std::vector<Word> _relators;
  };

  // Grammar:  "<" gen ("," gen)* "|" [word ("," word)*] ">"
  // gen is a lowercase letter, word is [A-Za-z]+, whitespace is ignored.
  Presentation parse_presentation(std::string_view text);
  std::string to_string(Presentation const& p);

  // The commutator [c^d, c] written over {c, d}: "DCdCDcdc".
  Word commutator_h();

  std::vector<std::string> const& builtin_names();
  // One of: bs35, h_plus, h_minus, torus, klein, groupA, groupQ.
  Presentation builtin(std::string_view name);

  // H_eps = < a, X | h^-1 a h a^-eps, R > for a presentation < X | R > of H
  // and a word h over X.  The generator 'a' must not already be in X.
  Presentation amalgamate_with_loop(Presentation const& base,
                                    Word const&         h,
                                    int                 epsilon);
  // h^-1 a h a^-eps
  Word special_relator(Word const& h, int epsilon);

}  // namespace nonleighton
