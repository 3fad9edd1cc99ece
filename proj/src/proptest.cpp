#include "nonleighton/proptest.hpp"

#include <optional>
#include <random>
#include <string>

#include "nonleighton/bsgroup.hpp"
#include "nonleighton/enumerate.hpp"
#include "nonleighton/words.hpp"

namespace nonleighton {

  namespace {

    Word random_word(std::mt19937_64& rng, std::string const& alphabet, std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len(0, max_len);
      std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
      std::string                                s(len(rng), ' ');
      for (auto& ch : s) {
        ch = alphabet[pick(rng)];
      }
      return Word(s);
    }

    void record(Report& r, std::string const& name, std::optional<std::string> const& witness) {
      r.add(name, !witness, witness);
    }

  }  // namespace

  Report property_suite(std::uint64_t seed, std::size_t cases) {
    Report          r("proptest seed=" + std::to_string(seed));
    std::mt19937_64 rng(seed);
    GroupModel const bs35 = GroupModel::baumslag_solitar(3, 5);
    Word const       rel  = builtin("bs35").relators()[0];

    std::optional<std::string> idem, cyc, insertion, assoc, snf;
    for (std::size_t i = 0; i < cases; ++i) {
      Word const w = random_word(rng, "aAbBcC", 24);
      Word const f = free_reduce(w);
      if (!idem && (free_reduce(f) != f || !f.is_freely_reduced())) {
        idem = w.str();
      }
      Word const cr = cyclic_reduce(w);
      if (!cyc && cyclic_reduce(cr) != cr) {
        cyc = w.str();
      }

      Word const  u = random_word(rng, "cCdD", 12);
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, u.size())(rng);
      Word const  y = random_word(rng, "cCdD", 4);
      Word        inserted(u.str().substr(0, k));
      inserted = inserted + conjugate(rel, y) + Word(u.str().substr(k));
      if (!insertion && normal_form(inserted, bs35) != normal_form(u, bs35)) {
        insertion = u.str() + " / " + inserted.str();
      }

      Word const x1 = random_word(rng, "cCdD", 8);
      Word const x2 = random_word(rng, "cCdD", 8);
      Word const x3 = random_word(rng, "cCdD", 8);
      BsElement const e1 = normal_form(x1, bs35), e2 = normal_form(x2, bs35),
                      e3 = normal_form(x3, bs35);
      if (!assoc && multiply(multiply(e1, e2), e3) != multiply(e1, multiply(e2, e3))) {
        assoc = x1.str() + ", " + x2.str() + ", " + x3.str();
      }

      std::uniform_int_distribution<int>          dim(1, 4);
      std::uniform_int_distribution<std::int64_t> entry(-20, 20);
      IntMatrix m(dim(rng), std::vector<std::int64_t>(dim(rng)));
      for (auto& row : m) {
        for (auto& x : row) {
          x = entry(rng);
        }
      }
      IntMatrix const   d = smith_normal_form(m);
      std::size_t const t = std::min(d.size(), d[0].size());
      bool              ok = true;
      for (std::size_t a = 0; a < d.size(); ++a) {
        for (std::size_t b = 0; b < d[a].size(); ++b) {
          ok = ok && (a == b || d[a][b] == 0) && d[a][b] >= 0;
        }
      }
      for (std::size_t a = 0; a + 1 < t; ++a) {
        std::int64_t const p = d[a][a], q = d[a + 1][a + 1];
        ok = ok && (p == 0 ? q == 0 : q % p == 0);
      }
      if (!snf && !ok) {
        snf = "case " + std::to_string(i);
      }
    }
    record(r, "free reduction is idempotent", idem);
    record(r, "cyclic reduction is idempotent", cyc);
    record(r, "inserting a conjugated relator keeps the normal form", insertion);
    record(r, "multiplication of normal forms is associative", assoc);
    record(r, "Smith normal form is diagonal with a divisibility chain", snf);
    r.count("cases", static_cast<std::int64_t>(cases));
    return r;
  }

}  // namespace nonleighton
