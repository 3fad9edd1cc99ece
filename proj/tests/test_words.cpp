#include <doctest.h>

#include <random>

#include "nonleighton/errors.hpp"
#include "nonleighton/words.hpp"
#include "oracles.hpp"

using namespace nonleighton;

TEST_CASE("free_reduce") {
  CHECK(free_reduce(Word("aA")).str() == "");
  CHECK(free_reduce(Word("DCdCDcdc")).str() == "DCdCDcdc");
  CHECK(free_reduce(Word("cCdD")).str() == "");
  CHECK(free_reduce(Word("acCdDA")).str() == "");
  CHECK(free_reduce(Word("abBc")).str() == "ac");
  CHECK(Word("DCdCDcdc").is_freely_reduced());
  CHECK_FALSE(Word("abBc").is_freely_reduced());
}

TEST_CASE("cyclic_reduce") {
  CHECK(cyclic_reduce(Word("Aca")).str() == "c");
  CHECK(cyclic_reduce(Word("")).str() == "");
  CHECK(cyclic_reduce(Word("DcccdCCCCC")).str() == "DcccdCCCCC");
  CHECK(cyclic_reduce(Word("abAcBA")).str() == "Ac");
  CHECK(cyclic_reduce(Word("aA")).str() == "");
}

TEST_CASE("word constructors") {
  CHECK(invert(Word("DCdCDcdc")).str() == "CDCdcDcd");
  CHECK(commutator(conjugate(Word("c"), Word("d")), Word("c")).str() == "DCdCDcdc");
  CHECK(commutator_h().str() == "DCdCDcdc");
  CHECK(power(Word("c"), 3).str() == "ccc");
  CHECK(power(Word("cd"), -2).str() == "DCDC");
  CHECK(power(Word("c"), 0).str() == "");
  CHECK(conjugate(Word("c"), Word("d")).str() == "Dcd");
  CHECK(exponent_sum(Word("DcccdCCCCC"), 'c') == -2);
  CHECK(exponent_sum(Word("DcccdCCCCC"), 'd') == 0);
  CHECK(special_relator(commutator_h(), -1).str() == "CDCdcDcdaDCdCDcdca");
  CHECK(special_relator(commutator_h(), 1).str() == "CDCdcDcdaDCdCDcdcA");
}

TEST_CASE("words reject non-letters") {
  CHECK_THROWS_AS(Word("a1"), InputError);
  CHECK_THROWS_AS(Word("a b"), InputError);
}

TEST_CASE("parse_presentation") {
  Presentation const bs = parse_presentation("< c, d | DcccdCCCCC >");
  CHECK(bs == builtin("bs35"));
  CHECK(bs.generators() == std::vector<char>{'c', 'd'});

  Presentation const t = parse_presentation("< a, b | abAB >");
  CHECK(t.rank() == 2);
  REQUIRE(t.relators().size() == 1);
  CHECK(t.relators()[0].str() == "abAB");

  Presentation const f = parse_presentation("< a | >");
  CHECK(f.rank() == 1);
  CHECK(f.relators().empty());

  CHECK(parse_presentation("<a,b|ab,  BA>").relators().size() == 2);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_presentation("< a, a | >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | b >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a > x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a | a"), ParseError);
  try {
    parse_presentation("< a, b |\n  ab, ac >");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("builtins") {
  CHECK(builtin_names().size() == 7);
  CHECK(builtin("bs35").relators()[0].str() == "DcccdCCCCC");
  CHECK(builtin("torus").relators()[0].str() == "ABab");
  CHECK(builtin("klein").relators()[0].str() == "Baba");

  Presentation const hm = builtin("h_minus");
  CHECK(hm.generators() == std::vector<char>{'a', 'c', 'd'});
  REQUIRE(hm.relators().size() == 2);
  CHECK(hm.relators()[0].str() == "CDCdcDcd" + std::string("a") + "DCdCDcdc" + "a");
  CHECK(hm.relators()[1].str() == "DcccdCCCCC");
  CHECK(builtin("h_plus").relators()[0].str() == "CDCdcDcdaDCdCDcdcA");

  Presentation const a = builtin("groupA");
  REQUIRE(a.relators().size() == 2);
  CHECK(a.relators()[0] == commutator(Word("e"), Word("c")));
  CHECK(a.relators()[1].str() == "eeeCCCCC");

  Presentation const q = builtin("groupQ");
  REQUIRE(q.relators().size() == 3);
  CHECK(q.relators()[2].str() == "DcdE");

  CHECK_THROWS_AS(builtin("nope"), InputError);
}

TEST_CASE("print and parse round-trip for every builtin") {
  for (auto const& name : builtin_names()) {
    CAPTURE(name);
    Presentation const p = builtin(name);
    CHECK(parse_presentation(to_string(p)) == p);
  }
  CHECK(to_string(builtin("bs35")) == "< c, d | DcccdCCCCC >");
  CHECK(to_string(parse_presentation("<a|>")) == "< a | >");
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({'a', 'a'}, {}), InputError);
  CHECK_THROWS_AS(Presentation({'a'}, {Word("b")}), InputError);
  CHECK(Presentation({'a', 'b'}, {Word("abBa")}).relators()[0].str() == "aa");
}

TEST_CASE("free reduction properties on random words") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 10000; ++i) {
    Word const w = oracle::random_word(rng, "aAbBcC", 64);
    Word const f = free_reduce(w);
    REQUIRE(f.str() == oracle::naive_reduce(w.str()));
    REQUIRE(free_reduce(f) == f);
    REQUIRE(f.size() <= w.size());
    REQUIRE(f.is_freely_reduced());
    REQUIRE(invert(invert(w)) == w);
    REQUIRE(free_reduce(w + invert(w)).empty());

    Word const x = oracle::random_word(rng, "aAbB", 8);
    Word const y = oracle::random_word(rng, "aAbB", 8);
    REQUIRE(commutator(x, y) == free_reduce(invert(x) + invert(y) + x + y));

    Word const c = cyclic_reduce(w);
    REQUIRE(cyclic_reduce(c) == c);
    if (c.size() >= 2) {
      REQUIRE(c[0] != Letter{c[c.size() - 1].generator, -c[c.size() - 1].sign});
    }
  }
}
