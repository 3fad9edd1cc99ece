#pragma once

// Britton normal forms in Baumslag-Solitar groups
//   BS(m, n) = < c, d | d^-1 c^m d = c^n >
// and in the integers < b | >, which the torus/Klein-bottle demo uses.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nonleighton/words.hpp"

namespace nonleighton {

  struct GroupModel {
    enum class Kind { baumslag_solitar, integers };

    Kind         kind = Kind::baumslag_solitar;
    std::int64_t m    = 3;
    std::int64_t n    = 5;
    char         c    = 'c';  // the base generator (b for the integers)
    char         d    = 'd';  // the stable letter, unused for the integers

    static GroupModel baumslag_solitar(std::int64_t m,
                                       std::int64_t n,
                                       char         c = 'c',
                                       char         d = 'd');
    static GroupModel integers(char b = 'b');

    std::vector<char> generators() const;
    Presentation presentation() const;

    friend bool operator==(GroupModel const&, GroupModel const&) = default;
  };

  // One "d^sign c^exponent" block of a normal form.
  struct Syllable {
    int          d_sign;
    std::int64_t c_exponent;

    friend bool operator==(Syllable const&, Syllable const&) = default;
    friend auto operator<=>(Syllable const&, Syllable const&) = default;
  };

  // c^head d^s1 c^e1 ... d^sk c^ek with 0 <= ei < |n| after d and
  // 0 <= ei < |m| after d^-1, and no d^s c^0 d^-s.
  class BsElement {
   public:
    explicit BsElement(GroupModel model) : _model(model) {}
    BsElement(GroupModel model, std::int64_t head, std::vector<Syllable> tail);

    GroupModel const& model() const noexcept {
      return _model;
    }
    std::int64_t head() const noexcept {
      return _head;
    }
    std::vector<Syllable> const& tail() const noexcept {
      return _tail;
    }
    bool is_identity() const noexcept {
      return _head == 0 && _tail.empty();
    }
    // Syllable-range and no-pinch constraints.
    bool is_normal() const;

    Word to_word() const;
    // "c^-6 d^1 c^3"; the identity is "c^0".
    std::string to_string() const;

    friend bool operator==(BsElement const& x, BsElement const& y) {
      return x._model == y._model && x._head == y._head && x._tail == y._tail;
    }
    // Canonical order: fewer syllables first, then |head|, head, tail.  The
    // identity is the least element.
    friend std::strong_ordering operator<=>(BsElement const& x,
                                            BsElement const& y);

   private:
    friend class NormalFormBuilder;

    GroupModel            _model;
    std::int64_t          _head = 0;
    std::vector<Syllable> _tail;
  };

  BsElement normal_form(Word const& w, GroupModel const& model);
  BsElement multiply(BsElement const& x, BsElement const& y);
  BsElement invert_el(BsElement const& x);
  BsElement multiply(BsElement const& x, Word const& w);

  struct BallGraph {
    struct Edge {
      std::size_t src;
      char        label;
      std::size_t dst;
    };

    GroupModel               model;
    std::vector<BsElement>   vertices;  // breadth-first order
    std::vector<std::size_t> distance;
    std::vector<Edge>        edges;  // positive generators, both ends inside
    std::map<BsElement, std::size_t> index;

    std::optional<std::size_t> find(BsElement const& x) const;
  };

  // Default caps: 6 for BS(m, n), 10^6 for the integers.
  std::size_t default_ball_radius_cap(GroupModel const& model);

  BallGraph cayley_ball(GroupModel const&          model,
                        std::size_t                radius,
                        std::optional<std::size_t> radius_cap = std::nullopt);

  std::string ball_to_json(BallGraph const& ball);

  // 2-colouring of the paths of x -> x·h inside a finite vertex set.
  class ParityColoring {
   public:
    ParityColoring() = default;
    explicit ParityColoring(std::map<BsElement, int> parity)
        : _parity(std::move(parity)) {}

    int of(BsElement const& x) const;
    bool contains(BsElement const& x) const {
      return _parity.count(x) != 0;
    }
    void set(BsElement const& x, int parity) {
      _parity.insert_or_assign(x, parity);
    }
    std::size_t size() const noexcept {
      return _parity.size();
    }
    std::map<BsElement, int> const& values() const noexcept {
      return _parity;
    }

   private:
    std::map<BsElement, int> _parity;
  };

  // Each component of the h-translation graph must be a simple path; its
  // canonically least vertex gets parity 0.  A cycle throws
  // InvariantViolation (h would have finite order).
  ParityColoring h_parity(std::span<BsElement const> vertices,
                          BsElement const&           h);
  ParityColoring h_parity(BallGraph const& ball, BsElement const& h);

}  // namespace nonleighton
