#include <doctest.h>

#include "nonleighton/enumerate.hpp"
#include "nonleighton/lemmas.hpp"
#include "nonleighton/words.hpp"
#include "oracles.hpp"

using namespace nonleighton;

TEST_CASE("commutator lemma, small bounds") {
  Report const r = lemma_commutator_check(2, 3);
  CHECK(r.pass());
  CHECK(r.counts().at("subgroups") == 4);
  CHECK(r.counts().at("homomorphisms to S_3") == 12);
}

TEST_CASE("commutator lemma at index 6 and degree 5") {
  Report const r = lemma_commutator_check(6, 5);
  CHECK(r.pass());
  // Regression values, frozen after the first verified run.
  CHECK(r.counts().at("subgroups of index 1") == 1);
  CHECK(r.counts().at("subgroups of index 2") == 3);
  CHECK(r.counts().at("subgroups of index 3") == 1);
  CHECK(r.counts().at("subgroups of index 4") == 7);
  CHECK(r.counts().at("subgroups of index 5") == 1);
  CHECK(r.counts().at("subgroups of index 6") == 3);
  CHECK(r.counts().at("homomorphisms to S_4") == 96);
  CHECK(r.counts().at("homomorphisms to S_5") == 480);
}

TEST_CASE("subgroup goldens agree with counting transitive actions") {
  Presentation const p = builtin("bs35");
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    std::size_t count = 0;
    for (auto const& t : low_index(p, k)) {
      count += t.size() == static_cast<std::size_t>(k);
    }
    CHECK(count == oracle::subgroups_of_index(p, k));
  }
  CHECK(oracle::brute_force_homs(p, 5).size() == 480);
}

TEST_CASE("bottle lemma consequence") {
  CHECK(lemma_bottle_consequence_check(1).pass());
  Report const two = lemma_bottle_consequence_check(2);
  CHECK(two.pass());
  Report const r = lemma_bottle_consequence_check(4);
  CHECK(r.pass());
  // Regression values, frozen after the first verified run.
  CHECK(r.counts().at("subgroups of index 2") == 7);
  CHECK(r.counts().at("subgroups of index 3") == 13);
  CHECK(r.counts().at("subgroups of index 4") == 111);
  CHECK(r.counts().at("subgroups") == 132);
  Presentation const p = builtin("h_minus");
  for (int k = 2; k <= 4; ++k) {
    CHECK(r.counts().at("subgroups of index " + std::to_string(k))
          == static_cast<std::int64_t>(oracle::subgroups_of_index(p, k)));
  }
}

TEST_CASE("a^2 escapes some subgroup of H_+") {
  // a -> 1, c, d -> 0 into Z/3 respects both relators of H_+.
  bool found = false;
  for (auto const& t : low_index(builtin("h_plus"), 3)) {
    found = found || !fixes_coset_one(t, Word("aa"));
  }
  CHECK(found);
}

TEST_CASE("abelian consistency") {
  Report const r = abelian_consistency_check();
  CHECK(r.pass());
  CHECK(r.checks().size() == 3);
}

TEST_CASE("cover soundness") {
  Report const bs = cover_soundness_check(builtin("bs35"), 6);
  CHECK(bs.pass());
  CHECK(bs.counts().at("covers") == 16);
  CHECK(bs.counts().at("euler characteristic of base") == 0);
  Report const t = cover_soundness_check(builtin("torus"), 4);
  CHECK(t.pass());
}
