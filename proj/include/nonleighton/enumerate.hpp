#pragma once

// Coset tables, Todd-Coxeter enumeration, low-index subgroups, homomorphisms
// into symmetric groups, Smith normal form and abelianization.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nonleighton/words.hpp"

namespace nonleighton {

  // Right action of the generators on cosets 0..n-1 of a subgroup; coset 0 is
  // the subgroup itself.  Entries equal to `undefined` mark a partial table.
  class CosetTable {
   public:
    static constexpr int undefined = -1;

    CosetTable() = default;
    CosetTable(std::vector<char> generators, std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }
    std::vector<char> const& generators() const noexcept {
      return _generators;
    }

    int image(std::size_t coset, std::size_t gen) const {
      return _forward[gen][coset];
    }
    int preimage(std::size_t coset, std::size_t gen) const {
      return _backward[gen][coset];
    }
    // Sets coset·gen = target and target·gen^-1 = coset.
    void define(std::size_t coset, std::size_t gen, std::size_t target);

    std::vector<int> const& action(std::size_t gen) const {
      return _forward[gen];
    }

    bool is_complete() const noexcept;
    // Follows w from `coset`; returns undefined if the trace leaves the table.
    int trace(std::size_t coset, Word const& w) const;
    bool is_transitive() const;
    // Every relator of p traces a closed path at every coset.
    bool satisfies(Presentation const& p) const;
    // Breadth-first renumbering from coset 0, generators in order g, g^-1.
    bool is_canonical() const;
    CosetTable canonical() const;

    // Schreier generators for the stabiliser of coset 0.
    std::vector<Word> subgroup_generators() const;

    friend bool operator==(CosetTable const&, CosetTable const&) = default;
    // Orders by (index, action bytes).
    friend bool operator<(CosetTable const& x, CosetTable const& y);

   private:
    std::vector<char>             _generators;
    std::size_t                   _n = 0;
    std::vector<std::vector<int>> _forward;
    std::vector<std::vector<int>> _backward;
  };

  bool fixes_coset_one(CosetTable const& t, Word const& w);

  // Throws CapExceeded ("index too large or infinite") when the number of live
  // cosets would exceed max_cosets.
  CosetTable todd_coxeter(Presentation const&      p,
                          std::vector<Word> const& subgroup_generators,
                          std::size_t              max_cosets);

  // Every subgroup of index at most n_max, once each, sorted.
  std::vector<CosetTable> low_index(Presentation const& p, std::size_t n_max);

  struct Permutation {
    std::vector<std::uint8_t> images;

    std::size_t degree() const noexcept {
      return images.size();
    }
    static Permutation identity(std::size_t n);
    Permutation inverse() const;
    // Left-to-right: (x * y)(i) = y(x(i)).
    friend Permutation operator*(Permutation const& x, Permutation const& y);
    bool is_identity() const noexcept;
    std::size_t order() const;
    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;
  };

  struct Homomorphism {
    std::size_t              degree = 0;
    std::vector<char>        generators;
    std::vector<Permutation> images;  // parallel to generators

    Permutation evaluate(Word const& w) const;
  };

  inline constexpr std::size_t default_hom_degree_cap = 6;

  // All assignments of permutations of degree n satisfying every relator, in
  // lexicographic order of the image tuple.
  std::vector<Homomorphism> enumerate_homs(Presentation const& p,
                                           std::size_t         degree,
                                           std::size_t degree_cap
                                           = default_hom_degree_cap);

  using IntMatrix = std::vector<std::vector<std::int64_t>>;

  // Diagonal matrix of the same shape with d1 | d2 | ... and nonnegative
  // entries.  Arithmetic is overflow-checked (std::overflow_error).
  IntMatrix smith_normal_form(IntMatrix m);

  // Invariant factors, unit factors dropped, 0 for each infinite cyclic
  // factor, zeros last.
  using AbelianInvariants = std::vector<std::int64_t>;

  IntMatrix exponent_matrix(Presentation const& p);
  AbelianInvariants abelianization(Presentation const& p);
  std::string to_string(AbelianInvariants const& inv);

}  // namespace nonleighton
