#include "nonleighton/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "nonleighton/errors.hpp"
#include "nonleighton/union_find.hpp"

namespace nonleighton {

  namespace {

    // Letters as table columns: generator i is column 2i, its inverse 2i+1.
    constexpr std::size_t inverse_column(std::size_t col) noexcept {
      return col ^ 1U;
    }

    std::vector<std::size_t> to_columns(Presentation const& p, Word const& w) {
      std::vector<std::size_t> out;
      out.reserve(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        Letter l   = w[i];
        int    gen = p.index_of(l.generator);
        if (gen < 0) {
          throw InputError(std::string("letter '") + l.symbol()
                           + "' is not a generator of the presentation");
        }
        out.push_back(2 * static_cast<std::size_t>(gen) + (l.sign < 0));
      }
      return out;
    }

    std::vector<std::size_t> to_columns(std::vector<char> const& gens,
                                        Word const&              w) {
      std::vector<std::size_t> out;
      out.reserve(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        Letter l  = w[i];
        auto   it = std::find(gens.begin(), gens.end(), l.generator);
        if (it == gens.end()) {
          throw InputError(std::string("letter '") + l.symbol()
                           + "' is not a generator of the coset table");
        }
        out.push_back(2 * static_cast<std::size_t>(it - gens.begin())
                      + (l.sign < 0));
      }
      return out;
    }

    // Table indexed [coset][column].
    using Rows = std::vector<std::vector<int>>;

    CosetTable rows_to_table(std::vector<char> const& gens, Rows const& rows) {
      CosetTable t(gens, rows.size());
      for (std::size_t c = 0; c < rows.size(); ++c) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          if (rows[c][2 * g] != CosetTable::undefined) {
            t.define(c, g, static_cast<std::size_t>(rows[c][2 * g]));
          }
        }
      }
      return t;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CosetTable
  ////////////////////////////////////////////////////////////////////////

  CosetTable::CosetTable(std::vector<char> generators, std::size_t n)
      : _generators(std::move(generators)),
        _n(n),
        _forward(_generators.size(), std::vector<int>(n, undefined)),
        _backward(_generators.size(), std::vector<int>(n, undefined)) {}

  void CosetTable::define(std::size_t coset, std::size_t gen, std::size_t target) {
    _forward[gen][coset]   = static_cast<int>(target);
    _backward[gen][target] = static_cast<int>(coset);
  }

  bool CosetTable::is_complete() const noexcept {
    for (auto const& row : _forward) {
      if (std::find(row.begin(), row.end(), undefined) != row.end()) {
        return false;
      }
    }
    for (auto const& row : _backward) {
      if (std::find(row.begin(), row.end(), undefined) != row.end()) {
        return false;
      }
    }
    return true;
  }

  int CosetTable::trace(std::size_t coset, Word const& w) const {
    int cur = static_cast<int>(coset);
    for (std::size_t col : to_columns(_generators, w)) {
      auto const& map = (col & 1U) ? _backward[col / 2] : _forward[col / 2];
      cur             = map[static_cast<std::size_t>(cur)];
      if (cur == undefined) {
        return undefined;
      }
    }
    return cur;
  }

  bool CosetTable::is_transitive() const {
    if (_n == 0) {
      return false;
    }
    std::vector<bool>        seen(_n, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t g = 0; g < _generators.size(); ++g) {
        for (int next : {_forward[g][queue[i]], _backward[g][queue[i]]}) {
          if (next != undefined && !seen[static_cast<std::size_t>(next)]) {
            seen[static_cast<std::size_t>(next)] = true;
            queue.push_back(static_cast<std::size_t>(next));
          }
        }
      }
    }
    return queue.size() == _n;
  }

  bool CosetTable::satisfies(Presentation const& p) const {
    for (auto const& r : p.relators()) {
      for (std::size_t c = 0; c < _n; ++c) {
        if (trace(c, r) != static_cast<int>(c)) {
          return false;
        }
      }
    }
    return true;
  }

  CosetTable CosetTable::canonical() const {
    std::vector<int>         number(_n, undefined);
    std::vector<std::size_t> order{0};
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t g = 0; g < _generators.size(); ++g) {
        for (int next : {_forward[g][order[i]], _backward[g][order[i]]}) {
          if (next != undefined && number[static_cast<std::size_t>(next)] == undefined) {
            number[static_cast<std::size_t>(next)] = static_cast<int>(order.size());
            order.push_back(static_cast<std::size_t>(next));
          }
        }
      }
    }
    if (order.size() != _n) {
      throw InvariantViolation("canonical(): coset table is not transitive");
    }
    CosetTable out(_generators, _n);
    for (std::size_t c = 0; c < _n; ++c) {
      for (std::size_t g = 0; g < _generators.size(); ++g) {
        int t = _forward[g][c];
        if (t != undefined) {
          out.define(static_cast<std::size_t>(number[c]),
                     g,
                     static_cast<std::size_t>(number[static_cast<std::size_t>(t)]));
        }
      }
    }
    return out;
  }

  bool CosetTable::is_canonical() const {
    return canonical() == *this;
  }

  std::vector<Word> CosetTable::subgroup_generators() const {
    if (!is_complete()) {
      throw InvariantViolation("subgroup_generators(): table is not complete");
    }
    // Breadth-first spanning tree; rep[c] is a word taking coset 0 to c.
    std::vector<std::optional<Word>>                rep(_n);
    std::set<std::pair<std::size_t, std::size_t>>   tree;  // (coset, gen)
    std::vector<std::size_t>                        order{0};
    rep[0] = Word();
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::size_t c = order[i];
      for (std::size_t g = 0; g < _generators.size(); ++g) {
        auto f = static_cast<std::size_t>(_forward[g][c]);
        if (!rep[f]) {
          rep[f] = *rep[c] + Word(std::string(1, _generators[g]));
          tree.emplace(c, g);
          order.push_back(f);
        }
        auto b = static_cast<std::size_t>(_backward[g][c]);
        if (!rep[b]) {
          rep[b] = *rep[c]
                   + Word(std::string(1, inverse_symbol(_generators[g])));
          tree.emplace(b, g);
          order.push_back(b);
        }
      }
    }
    std::vector<Word> gens;
    for (std::size_t c = 0; c < _n; ++c) {
      for (std::size_t g = 0; g < _generators.size(); ++g) {
        if (tree.count({c, g})) {
          continue;
        }
        auto t = static_cast<std::size_t>(_forward[g][c]);
        Word w = free_reduce(*rep[c] + Word(std::string(1, _generators[g]))
                             + invert(*rep[t]));
        if (!w.empty()) {
          gens.push_back(std::move(w));
        }
      }
    }
    return gens;
  }

  bool operator<(CosetTable const& x, CosetTable const& y) {
    if (x._n != y._n) {
      return x._n < y._n;
    }
    return x._forward < y._forward;
  }

  bool fixes_coset_one(CosetTable const& t, Word const& w) {
    if (!t.is_complete()) {
      throw InputError("fixes_coset_one requires a complete coset table");
    }
    return t.trace(0, w) == 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Todd-Coxeter (HLT with coincidence processing)
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Enumerator {
     public:
      Enumerator(Presentation const&      p,
                 std::vector<Word> const& subgroup,
                 std::size_t              max_cosets)
          : _ncols(2 * p.rank()), _max(max_cosets) {
        for (auto const& r : p.relators()) {
          _relators.push_back(to_columns(p, r));
        }
        for (auto const& w : subgroup) {
          _subgroup.push_back(to_columns(p, free_reduce(w)));
        }
        new_row();
      }

      Rows run() {
        while (true) {
          try {
            for (auto const& w : _subgroup) {
              scan_and_fill(0, w);
            }
            break;
          } catch (OutOfRows const&) {
            compact_or_throw(0);
          }
        }
        std::size_t alpha = 0;
        while (alpha < _rows.size()) {
          try {
            if (_uf.is_root(alpha)) {
              for (auto const& r : _relators) {
                if (!_uf.is_root(alpha)) {
                  break;
                }
                scan_and_fill(alpha, r);
              }
              for (std::size_t x = 0; x < _ncols && _uf.is_root(alpha); ++x) {
                if (_rows[alpha][x] == CosetTable::undefined) {
                  define(alpha, x);
                }
              }
            }
            ++alpha;
          } catch (OutOfRows const&) {
            alpha = compact_or_throw(alpha);
          }
        }
        compact();
        return _rows;
      }

     private:
      struct OutOfRows {};

      std::size_t new_row() {
        if (_rows.size() >= _max) {
          throw OutOfRows{};
        }
        _rows.emplace_back(_ncols, CosetTable::undefined);
        _uf.add();
        ++_live;
        return _rows.size() - 1;
      }

      void define(std::size_t coset, std::size_t col) {
        std::size_t fresh = new_row();
        set(coset, col, fresh);
      }

      void set(std::size_t coset, std::size_t col, std::size_t target) {
        _rows[coset][col]                  = static_cast<int>(target);
        _rows[target][inverse_column(col)] = static_cast<int>(coset);
      }

      void scan_and_fill(std::size_t alpha, std::vector<std::size_t> const& w) {
        if (w.empty()) {
          return;
        }
        std::size_t f = alpha, b = alpha;
        std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
        while (true) {
          while (i < j && _rows[f][w[i]] != CosetTable::undefined) {
            f = static_cast<std::size_t>(_rows[f][w[i]]);
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i
                 && _rows[b][inverse_column(w[j - 1])] != CosetTable::undefined) {
            b = static_cast<std::size_t>(_rows[b][inverse_column(w[j - 1])]);
            --j;
          }
          if (j == i) {
            coincidence(f, b);
            return;
          }
          if (j == i + 1) {
            set(f, w[i], b);
            return;
          }
          define(f, w[i]);
        }
      }

      void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
        std::size_t dead = _uf.unite(k, l);
        if (dead != _uf.size()) {
          queue.push_back(dead);
          --_live;
        }
      }

      void coincidence(std::size_t a, std::size_t b) {
        std::vector<std::size_t> queue;
        merge(a, b, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
          std::size_t gamma = queue[q];
          for (std::size_t x = 0; x < _ncols; ++x) {
            int delta_i = _rows[gamma][x];
            if (delta_i == CosetTable::undefined) {
              continue;
            }
            auto delta = static_cast<std::size_t>(delta_i);
            _rows[delta][inverse_column(x)] = CosetTable::undefined;
            std::size_t mu = _uf.find(gamma);
            std::size_t nu = _uf.find(delta);
            if (_rows[mu][x] != CosetTable::undefined) {
              merge(nu, static_cast<std::size_t>(_rows[mu][x]), queue);
            } else if (_rows[nu][inverse_column(x)] != CosetTable::undefined) {
              merge(mu,
                    static_cast<std::size_t>(_rows[nu][inverse_column(x)]),
                    queue);
            } else {
              set(mu, x, nu);
            }
          }
        }
      }

      // Returns the new position of `alpha` (or of the first live row after
      // it) so the caller can resume the scan.
      std::size_t compact_or_throw(std::size_t alpha) {
        if (_live == _rows.size()) {
          throw CapExceeded("coset enumeration exceeded "
                            + std::to_string(_max)
                            + " cosets (index too large or infinite)");
        }
        std::size_t resume = 0;
        for (std::size_t c = 0; c < alpha && c < _rows.size(); ++c) {
          resume += _uf.is_root(c);
        }
        compact();
        return resume;
      }

      void compact() {
        std::vector<int> renumber(_rows.size(), CosetTable::undefined);
        std::size_t      next = 0;
        for (std::size_t c = 0; c < _rows.size(); ++c) {
          if (_uf.is_root(c)) {
            renumber[c] = static_cast<int>(next++);
          }
        }
        Rows fresh;
        fresh.reserve(next);
        for (std::size_t c = 0; c < _rows.size(); ++c) {
          if (!_uf.is_root(c)) {
            continue;
          }
          std::vector<int> row(_ncols, CosetTable::undefined);
          for (std::size_t x = 0; x < _ncols; ++x) {
            int t = _rows[c][x];
            if (t != CosetTable::undefined) {
              row[x] = renumber[_uf.find(static_cast<std::size_t>(t))];
            }
          }
          fresh.push_back(std::move(row));
        }
        _rows = std::move(fresh);
        _uf   = MinRootDisjointSets(_rows.size());
        _live = _rows.size();
      }

      std::size_t                           _ncols;
      std::size_t                           _max;
      std::vector<std::vector<std::size_t>> _relators;
      std::vector<std::vector<std::size_t>> _subgroup;
      Rows                                  _rows;
      MinRootDisjointSets                   _uf;
      std::size_t                           _live = 0;
    };

  }  // namespace

  CosetTable todd_coxeter(Presentation const&      p,
                          std::vector<Word> const& subgroup_generators,
                          std::size_t              max_cosets) {
    if (max_cosets < 1) {
      throw InputError("max_cosets must be at least 1");
    }
    Rows       rows = Enumerator(p, subgroup_generators, max_cosets).run();
    CosetTable t    = rows_to_table(p.generators(), rows).canonical();
    if (!t.is_complete() || !t.satisfies(p)) {
      throw InvariantViolation("todd_coxeter produced an invalid table");
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Low-index subgroups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class LowIndexSearch {
     public:
      LowIndexSearch(Presentation const& p, std::size_t n_max)
          : _p(p),
            _ncols(2 * p.rank()),
            _n_max(n_max),
            _rows(n_max, std::vector<int>(2 * p.rank(), CosetTable::undefined)) {
        for (auto const& r : p.relators()) {
          if (!r.empty()) {
            _relators.push_back(to_columns(p, r));
          }
        }
      }

      std::vector<CosetTable> run() {
        _num_cosets = 1;
        if (_ncols == 0) {
          emit();
        } else {
          search();
        }
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
      }

     private:
      void set(std::size_t c, std::size_t col, std::size_t t) {
        _rows[c][col]                  = static_cast<int>(t);
        _rows[t][inverse_column(col)] = static_cast<int>(c);
        _trail.emplace_back(c, col);
        _trail.emplace_back(t, inverse_column(col));
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          auto [c, col] = _trail.back();
          _rows[c][col] = CosetTable::undefined;
          _trail.pop_back();
        }
      }

      enum class Scan { nothing, deduced, conflict };

      Scan scan(std::size_t c, std::vector<std::size_t> const& w) {
        std::size_t f = c, i = 0;
        while (i < w.size() && _rows[f][w[i]] != CosetTable::undefined) {
          f = static_cast<std::size_t>(_rows[f][w[i]]);
          ++i;
        }
        if (i == w.size()) {
          return f == c ? Scan::nothing : Scan::conflict;
        }
        std::size_t b = c, j = w.size();
        while (j > i + 1
               && _rows[b][inverse_column(w[j - 1])] != CosetTable::undefined) {
          b = static_cast<std::size_t>(_rows[b][inverse_column(w[j - 1])]);
          --j;
        }
        if (j != i + 1) {
          return Scan::nothing;
        }
        // Exactly one gap: f·w[i] must be b.
        if (_rows[b][inverse_column(w[i])] != CosetTable::undefined) {
          return Scan::conflict;
        }
        set(f, w[i], b);
        return Scan::deduced;
      }

      bool propagate() {
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t c = 0; c < _num_cosets; ++c) {
            for (auto const& r : _relators) {
              switch (scan(c, r)) {
                case Scan::conflict:
                  return false;
                case Scan::deduced:
                  changed = true;
                  break;
                case Scan::nothing:
                  break;
              }
            }
          }
        }
        return true;
      }

      void try_define(std::size_t c, std::size_t col, std::size_t t) {
        std::size_t mark = _trail.size();
        set(c, col, t);
        if (propagate()) {
          search();
        }
        undo(mark);
      }

      void search() {
        // First undefined entry in (coset, column) order.
        for (std::size_t c = 0; c < _num_cosets; ++c) {
          for (std::size_t col = 0; col < _ncols; ++col) {
            if (_rows[c][col] != CosetTable::undefined) {
              continue;
            }
            for (std::size_t t = 0; t < _num_cosets; ++t) {
              if (_rows[t][inverse_column(col)] == CosetTable::undefined) {
                try_define(c, col, t);
              }
            }
            if (_num_cosets < _n_max) {
              std::size_t t = _num_cosets++;
              try_define(c, col, t);
              --_num_cosets;
            }
            return;
          }
        }
        emit();
      }

      void emit() {
        Rows rows(_rows.begin(), _rows.begin() + static_cast<long>(_num_cosets));
        CosetTable t = rows_to_table(_p.generators(), rows);
        if (!t.is_complete() || !t.satisfies(_p) || !t.is_canonical()) {
          throw InvariantViolation("low_index produced an invalid table");
        }
        _found.push_back(std::move(t));
      }

      Presentation const&                               _p;
      std::size_t                                       _ncols;
      std::size_t                                       _n_max;
      Rows                                              _rows;
      std::vector<std::vector<std::size_t>>             _relators;
      std::vector<std::pair<std::size_t, std::size_t>>  _trail;
      std::size_t                                       _num_cosets = 1;
      std::vector<CosetTable>                           _found;
    };

  }  // namespace

  std::vector<CosetTable> low_index(Presentation const& p, std::size_t n_max) {
    if (n_max < 1) {
      throw InputError("low_index: n_max must be at least 1");
    }
    auto tables = LowIndexSearch(p, n_max).run();
    if (std::adjacent_find(tables.begin(), tables.end()) != tables.end()) {
      throw InvariantViolation("low_index produced a duplicate subgroup");
    }
    return tables;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutations and homomorphisms
  ////////////////////////////////////////////////////////////////////////

  Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), std::uint8_t(0));
    return p;
  }

  Permutation Permutation::inverse() const {
    Permutation out;
    out.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      out.images[images[i]] = static_cast<std::uint8_t>(i);
    }
    return out;
  }

  Permutation operator*(Permutation const& x, Permutation const& y) {
    Permutation out;
    out.images.resize(x.images.size());
    for (std::size_t i = 0; i < x.images.size(); ++i) {
      out.images[i] = y.images[x.images[i]];
    }
    return out;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::size_t Permutation::order() const {
    std::size_t       result = 1;
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images[j]) {
        seen[j] = true;
        ++len;
      }
      if (len > 0) {
        result = std::lcm(result, len);
      }
    }
    return result;
  }

  Permutation Homomorphism::evaluate(Word const& w) const {
    Permutation out = Permutation::identity(degree);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Letter l  = w[i];
      auto   it = std::find(generators.begin(), generators.end(), l.generator);
      if (it == generators.end()) {
        throw InputError(std::string("letter '") + l.symbol()
                         + "' is not a generator of the homomorphism");
      }
      auto const& img = images[static_cast<std::size_t>(it - generators.begin())];
      out = out * (l.sign > 0 ? img : img.inverse());
    }
    return out;
  }

  namespace {

    class HomSearch {
     public:
      HomSearch(Presentation const& p, std::size_t degree)
          : _p(p), _degree(degree), _assigned(p.rank()) {
        Permutation perm = Permutation::identity(degree);
        do {
          _all.push_back(perm);
        } while (std::next_permutation(perm.images.begin(), perm.images.end()));
        // A relator is checked as soon as its last generator is assigned.
        _check_at.resize(p.rank());
        for (auto const& r : p.relators()) {
          if (r.empty()) {
            continue;
          }
          int last = 0;
          for (std::size_t i = 0; i < r.size(); ++i) {
            last = std::max(last, p.index_of(r[i].generator));
          }
          _check_at[static_cast<std::size_t>(last)].push_back(&r);
        }
      }

      std::vector<Homomorphism> run() {
        if (_p.rank() == 0) {
          _found.push_back({_degree, {}, {}});
        } else {
          extend(0);
        }
        return std::move(_found);
      }

     private:
      void extend(std::size_t gen) {
        for (auto const& perm : _all) {
          _assigned[gen] = perm;
          if (!relators_hold(gen)) {
            continue;
          }
          if (gen + 1 == _p.rank()) {
            _found.push_back({_degree, _p.generators(), _assigned});
          } else {
            extend(gen + 1);
          }
        }
      }

      bool relators_hold(std::size_t gen) const {
        Homomorphism partial{_degree, _p.generators(), _assigned};
        for (Word const* r : _check_at[gen]) {
          if (!partial.evaluate(*r).is_identity()) {
            return false;
          }
        }
        return true;
      }

      Presentation const&                    _p;
      std::size_t                            _degree;
      std::vector<Permutation>               _all;
      std::vector<Permutation>               _assigned;
      std::vector<std::vector<Word const*>>  _check_at;
      std::vector<Homomorphism>              _found;
    };

  }  // namespace

  std::vector<Homomorphism> enumerate_homs(Presentation const& p,
                                           std::size_t         degree,
                                           std::size_t         degree_cap) {
    if (degree > degree_cap) {
      throw CapExceeded("homomorphism degree " + std::to_string(degree)
                        + " exceeds cap " + std::to_string(degree_cap));
    }
    if (degree < 1 || degree > 255) {
      throw InputError("homomorphism degree must be in 1..255");
    }
    return HomSearch(p, degree).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
      std::int64_t out;
      if (__builtin_mul_overflow(x, y, &out)) {
        throw std::overflow_error("smith_normal_form: integer overflow");
      }
      return out;
    }

    std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
      std::int64_t out;
      if (__builtin_sub_overflow(x, y, &out)) {
        throw std::overflow_error("smith_normal_form: integer overflow");
      }
      return out;
    }

    std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t out;
      if (__builtin_add_overflow(x, y, &out)) {
        throw std::overflow_error("smith_normal_form: integer overflow");
      }
      return out;
    }

    std::int64_t checked_abs(std::int64_t x) {
      return x < 0 ? checked_sub(0, x) : x;
    }

  }  // namespace

  IntMatrix smith_normal_form(IntMatrix m) {
    std::size_t const rows = m.size();
    std::size_t const cols = rows == 0 ? 0 : m[0].size();
    for (auto const& row : m) {
      if (row.size() != cols) {
        throw InputError("smith_normal_form: ragged matrix");
      }
    }

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      while (true) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        std::size_t  pi = rows, pj = cols;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (m[i][j] != 0 && (best == 0 || checked_abs(m[i][j]) < best)) {
              best = checked_abs(m[i][j]);
              pi   = i;
              pj   = j;
            }
          }
        }
        if (best == 0) {
          return m;
        }
        std::swap(m[t], m[pi]);
        for (auto& row : m) {
          std::swap(row[t], row[pj]);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          std::int64_t q = m[i][t] / m[t][t];
          for (std::size_t j = t; j < cols; ++j) {
            m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
          }
          clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          std::int64_t q = m[t][j] / m[t][t];
          for (std::size_t i = t; i < rows; ++i) {
            m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
          }
          clean = clean && m[t][j] == 0;
        }
        if (!clean) {
          continue;
        }

        // Divisibility: fold an offending row into row t and go again.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              bad = i;
              break;
            }
          }
        }
        if (bad == rows) {
          break;
        }
        for (std::size_t j = t; j < cols; ++j) {
          m[t][j] = checked_add(m[t][j], m[bad][j]);
        }
      }
      m[t][t] = checked_abs(m[t][t]);
    }
    return m;
  }

  IntMatrix exponent_matrix(Presentation const& p) {
    IntMatrix m;
    for (auto const& r : p.relators()) {
      std::vector<std::int64_t> row;
      for (char g : p.generators()) {
        row.push_back(exponent_sum(r, g));
      }
      m.push_back(std::move(row));
    }
    return m;
  }

  AbelianInvariants abelianization(Presentation const& p) {
    IntMatrix const   d = smith_normal_form(exponent_matrix(p));
    AbelianInvariants out;
    std::size_t       nonzero = 0;
    for (std::size_t i = 0; i < std::min(d.size(), p.rank()); ++i) {
      if (d[i][i] != 0) {
        ++nonzero;
        if (d[i][i] != 1) {
          out.push_back(d[i][i]);
        }
      }
    }
    out.insert(out.end(), p.rank() - nonzero, 0);
    return out;
  }

  std::string to_string(AbelianInvariants const& inv) {
    std::string out = "[";
    for (std::size_t i = 0; i < inv.size(); ++i) {
      out += (i == 0 ? "" : ", ") + std::to_string(inv[i]);
    }
    return out + "]";
  }

}  // namespace nonleighton
