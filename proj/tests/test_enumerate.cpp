#include <doctest.h>

#include <random>
#include <set>

#include "nonleighton/enumerate.hpp"
#include "nonleighton/errors.hpp"
#include "nonleighton/json_io.hpp"
#include "oracles.hpp"

using namespace nonleighton;

namespace {

  std::size_t count_index(std::vector<CosetTable> const& ts, std::size_t n) {
    std::size_t k = 0;
    for (auto const& t : ts) {
      k += t.size() == n;
    }
    return k;
  }

}  // namespace

TEST_CASE("todd_coxeter examples") {
  CHECK(todd_coxeter(parse_presentation("< a | >"), {Word("aaa")}, 100).size() == 3);
  CHECK(todd_coxeter(builtin("bs35"), {Word("c"), Word("dd"), Word("dcD")}, 1000).size()
        == 2);
  CHECK(todd_coxeter(builtin("torus"), {Word("a"), Word("b")}, 100).size() == 1);
  CHECK(todd_coxeter(builtin("torus"), {Word("a"), Word("bb")}, 100).size() == 2);
}

TEST_CASE("todd_coxeter overflows on infinite index") {
  CHECK_THROWS_AS(todd_coxeter(builtin("bs35"), {Word("c")}, 500), CapExceeded);
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("< a | >"), {}, 50), CapExceeded);
}

TEST_CASE("todd_coxeter output is canonical, complete and transitive") {
  for (auto const& gens : std::vector<std::vector<Word>>{
           {Word("c"), Word("dd"), Word("dcD")}, {Word("c"), Word("d")}}) {
    CosetTable const t = todd_coxeter(builtin("bs35"), gens, 10000);
    CHECK(t.is_complete());
    CHECK(t.is_transitive());
    CHECK(t.is_canonical());
    CHECK(t.satisfies(builtin("bs35")));
    for (auto const& g : gens) {
      CHECK(fixes_coset_one(t, g));
    }
  }
}

TEST_CASE("low_index examples") {
  auto const bs = low_index(builtin("bs35"), 2);
  CHECK(bs.size() == 4);
  CHECK(count_index(bs, 1) == 1);
  CHECK(count_index(bs, 2) == 3);
  CHECK(low_index(parse_presentation("< a | >"), 3).size() == 3);
  CHECK(low_index(builtin("torus"), 2).size() == 4);
}

TEST_CASE("low_index output is complete, transitive, canonical, sorted, distinct") {
  for (auto const& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"bs35", 6}, {"torus", 4}, {"klein", 4}, {"h_minus", 3}, {"groupQ", 3}}) {
    CAPTURE(name);
    Presentation const p  = builtin(name);
    auto const         ts = low_index(p, n);
    for (auto const& t : ts) {
      CHECK(t.is_complete());
      CHECK(t.is_transitive());
      CHECK(t.is_canonical());
      CHECK(t.satisfies(p));
      CHECK(t.size() <= n);
    }
    for (std::size_t i = 1; i < ts.size(); ++i) {
      CHECK(ts[i - 1] < ts[i]);
    }
  }
}

TEST_CASE("low_index counts agree with counting transitive permutation actions") {
  for (auto const& [name, n] :
       std::vector<std::pair<std::string, int>>{{"bs35", 4}, {"torus", 4}, {"klein", 4},
                                                {"groupA", 4}, {"h_minus", 3}}) {
    CAPTURE(name);
    Presentation const p  = builtin(name);
    auto const         ts = low_index(p, n);
    for (int k = 1; k <= n; ++k) {
      CAPTURE(k);
      CHECK(count_index(ts, k) == oracle::subgroups_of_index(p, k));
    }
  }
}

TEST_CASE("fixes_coset_one") {
  auto const z = low_index(parse_presentation("< a | >"), 3);
  for (auto const& t : z) {
    CHECK(fixes_coset_one(t, Word("")));
  }
  CHECK_FALSE(fixes_coset_one(z.back(), Word("a")));
  CHECK(fixes_coset_one(z.back(), Word("aaa")));
  for (auto const& t : low_index(builtin("bs35"), 2)) {
    CHECK(fixes_coset_one(t, commutator_h()));
  }
}

TEST_CASE("Schreier generators regenerate the subgroup") {
  Presentation const p = builtin("bs35");
  for (auto const& t : low_index(p, 6)) {
    auto const gens = t.subgroup_generators();
    for (auto const& g : gens) {
      CHECK(fixes_coset_one(t, g));
    }
    CHECK(todd_coxeter(p, gens, 10000) == t);
  }
}

TEST_CASE("permutations") {
  Permutation const x{{1, 2, 0}};
  Permutation const y{{1, 0, 2}};
  CHECK((x * y).images == std::vector<std::uint8_t>{0, 2, 1});
  CHECK((x * x.inverse()).is_identity());
  CHECK(x.order() == 3);
  CHECK(Permutation{{1, 0, 3, 4, 2}}.order() == 6);
  CHECK(Permutation::identity(4).order() == 1);
}

TEST_CASE("enumerate_homs matches brute force") {
  for (auto const& [name, n] : std::vector<std::pair<std::string, int>>{
           {"bs35", 1}, {"bs35", 2}, {"bs35", 3}, {"bs35", 4}, {"torus", 3}, {"klein", 3}}) {
    CAPTURE(name);
    CAPTURE(n);
    Presentation const p      = builtin(name);
    auto const         homs   = enumerate_homs(p, n);
    auto const         brute  = oracle::brute_force_homs(p, n);
    CHECK(homs.size() == brute.size());
    std::set<std::vector<oracle::Perm>> mine;
    for (auto const& h : homs) {
      std::vector<oracle::Perm> images;
      for (auto const& g : h.images) {
        images.emplace_back(g.images.begin(), g.images.end());
      }
      mine.insert(images);
    }
    CHECK(mine == std::set<std::vector<oracle::Perm>>(brute.begin(), brute.end()));
  }
}

TEST_CASE("enumerate_homs examples") {
  Presentation const bs = builtin("bs35");
  std::size_t const  c  = static_cast<std::size_t>(bs.index_of('c'));
  for (auto const& h : enumerate_homs(bs, 3)) {
    CHECK(h.images[c].order() % 3 != 0);
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& h : enumerate_homs(bs, n)) {
      CHECK(h.evaluate(commutator_h()).is_identity());
    }
  }
  auto const trivial = enumerate_homs(parse_presentation("< a | a >"), 3);
  CHECK(trivial.size() == 1);
  CHECK(trivial[0].images[0].is_identity());
  CHECK_THROWS_AS(enumerate_homs(bs, 7), CapExceeded);
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form({{2}}) == IntMatrix{{2}});
  CHECK(smith_normal_form({{-5, 3}}) == IntMatrix{{1, 0}});
  CHECK(smith_normal_form({{3, 0}, {0, 5}}) == IntMatrix{{1, 0}, {0, 15}});
  CHECK(smith_normal_form({{0, 0}, {0, 0}}) == IntMatrix{{0, 0}, {0, 0}});
  CHECK(smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})
        == IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}});
}

TEST_CASE("smith_normal_form reports overflow") {
  std::int64_t const big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(smith_normal_form({{big, 0}, {0, 3}}), std::overflow_error);
}

TEST_CASE("smith_normal_form agrees with determinantal divisors") {
  std::mt19937_64                             rng(7);
  std::uniform_int_distribution<int>          dim(1, 4);
  std::uniform_int_distribution<std::int64_t> entry(-12, 12);
  for (int i = 0; i < 2000; ++i) {
    IntMatrix m(dim(rng), std::vector<std::int64_t>(dim(rng)));
    for (auto& row : m) {
      for (auto& x : row) {
        x = entry(rng);
      }
    }
    CAPTURE(i);
    IntMatrix const   d   = smith_normal_form(m);
    auto const        dk  = oracle::determinantal_divisors(m);
    oracle::i128      acc = 1;
    for (std::size_t k = 0; k < dk.size(); ++k) {
      acc = acc * d[k][k];
      REQUIRE(acc == dk[k]);
    }
    for (std::size_t a = 0; a < d.size(); ++a) {
      for (std::size_t b = 0; b < d[a].size(); ++b) {
        REQUIRE((a == b || d[a][b] == 0));
      }
    }
    for (std::size_t k = 0; k + 1 < dk.size(); ++k) {
      if (d[k][k] == 0) {
        REQUIRE(d[k + 1][k + 1] == 0);
      } else {
        REQUIRE(d[k + 1][k + 1] % d[k][k] == 0);
      }
    }
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(builtin("groupA")) == AbelianInvariants{0});
  CHECK(abelianization(builtin("bs35")) == AbelianInvariants{2, 0});
  CHECK(abelianization(builtin("groupQ")) == AbelianInvariants{2, 0});
  CHECK(abelianization(builtin("torus")) == AbelianInvariants{0, 0});
  CHECK(abelianization(builtin("klein")) == AbelianInvariants{2, 0});
  CHECK(abelianization(parse_presentation("< a | aaaaaa >")) == AbelianInvariants{6});
  CHECK(abelianization(parse_presentation("< a | a >")).empty());
  CHECK(to_string(AbelianInvariants{2, 0}) == "[2, 0]");
}

TEST_CASE("coset table JSON round-trip") {
  Presentation const p = builtin("bs35");
  for (auto const& t : low_index(p, 4)) {
    CHECK(table_from_json(table_to_json(t), p.generators()) == t);
    CHECK(table_from_json(table_to_json(t)) == t);
  }
  CHECK(table_to_json(todd_coxeter(p, {Word("c"), Word("dd"), Word("dcD")}, 100), false)
        == R"({"n":2,"action":{"c":[1,2],"d":[2,1]}})");
  CHECK_THROWS_AS(table_from_json("{\"n\": 2}"), InputError);
  CHECK_THROWS_AS(table_from_json(R"({"n":2,"action":{"c":[1,1]}})"), InputError);
}
