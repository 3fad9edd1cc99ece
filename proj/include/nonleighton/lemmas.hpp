#pragma once

// Finite-index facts about BS(3, 5) and H_-1, checked over every subgroup of
// small index and every homomorphism into a small symmetric group.

#include <cstddef>

#include "nonleighton/report.hpp"
#include "nonleighton/words.hpp"

namespace nonleighton {

  // Every subgroup of BS(3, 5) of index <= n_max contains h = [c^d, c]; every
  // homomorphism into S_k, k <= hom_degree_max, kills h and sends c to a
  // permutation whose order is prime to 3.
  Report lemma_commutator_check(std::size_t n_max, std::size_t hom_degree_max);

  // Every subgroup of H_-1 of index <= n_max contains h and a^2.
  Report lemma_bottle_consequence_check(std::size_t n_max);

  // groupA abelianizes to Z; groupQ and BS(3, 5) both to Z/2 + Z.
  Report abelian_consistency_check();

  // For every subgroup of index <= n_max, the cover built from its coset table
  // is a covering of the standard complex and has Euler characteristic
  // index times that of the base.
  Report cover_soundness_check(Presentation const& p, std::size_t n_max);

}  // namespace nonleighton
