#include "nonleighton/lemmas.hpp"

#include <optional>
#include <string>
#include <vector>

#include "nonleighton/complex2.hpp"
#include "nonleighton/enumerate.hpp"
#include "nonleighton/json_io.hpp"
#include "nonleighton/words.hpp"

namespace nonleighton {

  namespace {

    // Checks that every table fixes coset one under each word, recording the
    // per-index subgroup counts.
    void containment(Report&                        r,
                     std::vector<CosetTable> const& tables,
                     std::size_t                    n_max,
                     std::vector<Word> const&       words,
                     std::string const&             prefix) {
      std::vector<std::int64_t> per_index(n_max + 1, 0);
      for (auto const& t : tables) {
        ++per_index[t.size()];
      }
      for (std::size_t k = 1; k <= n_max; ++k) {
        r.count(prefix + "subgroups of index " + std::to_string(k), per_index[k]);
      }
      r.count(prefix + "subgroups", static_cast<std::int64_t>(tables.size()));

      for (auto const& w : words) {
        std::optional<std::string> witness;
        for (auto const& t : tables) {
          if (!fixes_coset_one(t, w)) {
            witness = table_to_json(t, false);
            break;
          }
        }
        r.add("every subgroup of index <= " + std::to_string(n_max) + " contains "
                  + w.str(),
              !witness,
              witness);
      }
    }

  }  // namespace

  Report lemma_commutator_check(std::size_t n_max, std::size_t hom_degree_max) {
    Report             r("lemma commutator");
    Presentation const bs35 = builtin("bs35");
    Word const         h    = commutator_h();

    containment(r, low_index(bs35, n_max), n_max, {h}, "");

    std::optional<std::string> kills, order;
    std::int64_t               total = 0;
    std::size_t const          c     = static_cast<std::size_t>(bs35.index_of('c'));
    for (std::size_t k = 1; k <= hom_degree_max; ++k) {
      auto const homs = enumerate_homs(bs35, k, hom_degree_max);
      r.count("homomorphisms to S_" + std::to_string(k),
              static_cast<std::int64_t>(homs.size()));
      total += static_cast<std::int64_t>(homs.size());
      for (auto const& phi : homs) {
        if (!kills && !phi.evaluate(h).is_identity()) {
          kills = hom_to_json(phi, false);
        }
        if (!order && phi.images[c].order() % 3 == 0) {
          order = hom_to_json(phi, false);
        }
      }
    }
    r.count("homomorphisms", total);
    std::string const bound = " (degree <= " + std::to_string(hom_degree_max) + ")";
    r.add("every homomorphism kills " + h.str() + bound, !kills, kills);
    r.add("no image of c has order divisible by 3" + bound, !order, order);
    return r;
  }

  Report lemma_bottle_consequence_check(std::size_t n_max) {
    Report             r("lemma bottle");
    Presentation const p = builtin("h_minus");
    containment(r, low_index(p, n_max), n_max, {commutator_h(), Word("aa")}, "");
    return r;
  }

  Report abelian_consistency_check() {
    Report r("abelian consistency");
    auto   expect = [&r](std::string const& name, AbelianInvariants const& want) {
      AbelianInvariants const got = abelianization(builtin(name));
      r.add(name + " abelianizes to " + to_string(want),
            got == want,
            got == want ? std::optional<std::string>{} : to_string(got));
    };
    expect("groupA", {0});
    expect("bs35", {2, 0});
    expect("groupQ", {2, 0});
    return r;
  }

  Report cover_soundness_check(Presentation const& p, std::size_t n_max) {
    Report         r("cover soundness " + to_string(p));
    Complex2 const base     = standard_complex(p);
    long const     chi_base = euler_characteristic(base);
    auto const     tables   = low_index(p, n_max);

    std::optional<std::string> covering, euler;
    for (auto const& t : tables) {
      auto const [cover, map] = build_cover_from_table(p, t);
      if (!covering) {
        Report const check = verify_covering(cover, base, map);
        if (!check.pass()) {
          auto const f = *check.first_failure();
          covering     = f.name + " " + f.witness.value_or("") + " in "
                     + table_to_json(t, false);
        }
      }
      if (!euler
          && euler_characteristic(cover) != static_cast<long>(t.size()) * chi_base) {
        euler = table_to_json(t, false);
      }
    }
    r.count("covers", static_cast<std::int64_t>(tables.size()));
    r.count("euler characteristic of base", chi_base);
    r.add("every cover of degree <= " + std::to_string(n_max) + " is a covering",
          !covering,
          covering);
    r.add("euler characteristic is the degree times that of the base", !euler, euler);
    return r;
  }

}  // namespace nonleighton
