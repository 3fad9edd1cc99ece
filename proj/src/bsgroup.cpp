#include "nonleighton/bsgroup.hpp"

#include <cstdlib>
#include <nlohmann/json.hpp>

#include "nonleighton/errors.hpp"

namespace nonleighton {

  GroupModel GroupModel::baumslag_solitar(std::int64_t m,
                                          std::int64_t n,
                                          char         c,
                                          char         d) {
    if (m == 0 || n == 0) {
      throw InputError("BS(m, n) needs nonzero m and n");
    }
    if (c == d || !is_generator_symbol(c) || !is_generator_symbol(d)) {
      throw InputError("BS(m, n) needs two distinct lowercase generators");
    }
    return GroupModel{Kind::baumslag_solitar, m, n, c, d};
  }

  GroupModel GroupModel::integers(char b) {
    if (!is_generator_symbol(b)) {
      throw InputError("the integers need a lowercase generator");
    }
    return GroupModel{Kind::integers, 1, 1, b, b};
  }

  std::vector<char> GroupModel::generators() const {
    if (kind == Kind::integers) {
      return {c};
    }
    return {c, d};
  }

  Presentation GroupModel::presentation() const {
    if (kind == Kind::integers) {
      return Presentation({c}, {});
    }
    Word const cw(std::string(1, c)), dw(std::string(1, d));
    return Presentation({c, d},
                        {free_reduce(conjugate(power(cw, m), dw)
                                     + power(cw, -n))});
  }

  namespace {

    // Floor division by |modulus| with a nonnegative remainder.
    std::pair<std::int64_t, std::int64_t> floor_divmod(std::int64_t x,
                                                       std::int64_t modulus) {
      std::int64_t const mod = std::llabs(modulus);
      std::int64_t       q   = x / mod;
      std::int64_t       r   = x % mod;
      if (r < 0) {
        r += mod;
        --q;
      }
      return {q, r};
    }

  }  // namespace

  // Incremental rewriting: the element so far is kept in normal form and
  // letters are pushed on the right.  Pushing c^k only touches the last
  // syllable and carries leftwards; pushing d^s either cancels a pinch or
  // opens a new syllable.
  class NormalFormBuilder {
   public:
    explicit NormalFormBuilder(BsElement start) : _x(std::move(start)) {}

    void push_c(std::int64_t k) {
      if (k == 0) {
        return;
      }
      if (_x._tail.empty()) {
        _x._head += k;
        return;
      }
      _x._tail.back().c_exponent += k;
      carry_left(_x._tail.size() - 1);
    }

    void push_d(int sign) {
      if (_x._model.kind == GroupModel::Kind::integers) {
        throw InputError("the integers have no stable letter");
      }
      if (!_x._tail.empty() && _x._tail.back().c_exponent == 0
          && _x._tail.back().d_sign == -sign) {
        _x._tail.pop_back();
      } else {
        _x._tail.push_back({sign, 0});
      }
    }

    void push(Letter l) {
      GroupModel const& g = _x._model;
      if (l.generator == g.c) {
        push_c(l.sign);
      } else if (g.kind == GroupModel::Kind::baumslag_solitar
                 && l.generator == g.d) {
        push_d(l.sign);
      } else {
        throw InputError(std::string("letter '") + l.symbol()
                         + "' is not a generator of the group");
      }
    }

    void push(BsElement const& y) {
      push_c(y._head);
      for (auto const& s : y._tail) {
        push_d(s.d_sign);
        push_c(s.c_exponent);
      }
    }

    BsElement result() && {
      return std::move(_x);
    }

   private:
    // d c^{nt+s} = c^{mt} d c^s and d^-1 c^{mt+s} = c^{nt} d^-1 c^s.  Carries
    // keep the residue of the syllable they land on, so no pinch appears.
    void carry_left(std::size_t i) {
      auto const& g = _x._model;
      while (true) {
        Syllable&    s          = _x._tail[i];
        std::int64_t modulus    = s.d_sign > 0 ? g.n : g.m;
        std::int64_t multiplier = s.d_sign > 0 ? g.m : g.n;
        auto [q, r]             = floor_divmod(s.c_exponent, modulus);
        s.c_exponent            = r;
        std::int64_t t          = modulus < 0 ? -q : q;
        std::int64_t carry      = multiplier * t;
        if (carry == 0) {
          return;
        }
        if (i == 0) {
          _x._head += carry;
          return;
        }
        _x._tail[--i].c_exponent += carry;
      }
    }

    BsElement _x;
  };

  BsElement::BsElement(GroupModel model, std::int64_t head, std::vector<Syllable> tail)
      : _model(model), _head(head), _tail(std::move(tail)) {
    if (!is_normal()) {
      throw InputError("syllables do not form a normal form: " + to_string());
    }
  }

  bool BsElement::is_normal() const {
    if (_model.kind == GroupModel::Kind::integers) {
      return _tail.empty();
    }
    for (std::size_t i = 0; i < _tail.size(); ++i) {
      auto const&  s   = _tail[i];
      std::int64_t mod = std::llabs(s.d_sign > 0 ? _model.n : _model.m);
      if ((s.d_sign != 1 && s.d_sign != -1) || s.c_exponent < 0
          || s.c_exponent >= mod) {
        return false;
      }
      if (i + 1 < _tail.size() && s.c_exponent == 0
          && _tail[i + 1].d_sign == -s.d_sign) {
        return false;
      }
    }
    return true;
  }

  Word BsElement::to_word() const {
    Word const c(std::string(1, _model.c));
    Word       out = power(c, _head);
    for (auto const& s : _tail) {
      out.append(Word(std::string(1, s.d_sign > 0 ? _model.d
                                                  : inverse_symbol(_model.d))));
      out.append(power(c, s.c_exponent));
    }
    return out;
  }

  std::string BsElement::to_string() const {
    std::string out = std::string(1, _model.c) + "^" + std::to_string(_head);
    for (auto const& s : _tail) {
      out += std::string(" ") + _model.d + "^" + std::to_string(s.d_sign) + " "
             + _model.c + "^" + std::to_string(s.c_exponent);
    }
    return out;
  }

  std::strong_ordering operator<=>(BsElement const& x, BsElement const& y) {
    if (auto cmp = x._tail.size() <=> y._tail.size(); cmp != 0) {
      return cmp;
    }
    if (auto cmp = std::llabs(x._head) <=> std::llabs(y._head); cmp != 0) {
      return cmp;
    }
    if (auto cmp = x._head <=> y._head; cmp != 0) {
      return cmp;
    }
    if (auto cmp = x._tail <=> y._tail; cmp != 0) {
      return cmp;
    }
    if (auto cmp = x._model.kind <=> y._model.kind; cmp != 0) {
      return cmp;
    }
    if (auto cmp = x._model.m <=> y._model.m; cmp != 0) {
      return cmp;
    }
    if (auto cmp = x._model.n <=> y._model.n; cmp != 0) {
      return cmp;
    }
    if (auto cmp = x._model.c <=> y._model.c; cmp != 0) {
      return cmp;
    }
    return x._model.d <=> y._model.d;
  }

  BsElement normal_form(Word const& w, GroupModel const& model) {
    NormalFormBuilder b{BsElement(model)};
    for (std::size_t i = 0; i < w.size(); ++i) {
      b.push(w[i]);
    }
    return std::move(b).result();
  }

  BsElement multiply(BsElement const& x, BsElement const& y) {
    if (!(x.model() == y.model())) {
      throw InputError("multiply: elements of different groups");
    }
    NormalFormBuilder b(x);
    b.push(y);
    return std::move(b).result();
  }

  BsElement multiply(BsElement const& x, Word const& w) {
    NormalFormBuilder b(x);
    for (std::size_t i = 0; i < w.size(); ++i) {
      b.push(w[i]);
    }
    return std::move(b).result();
  }

  BsElement invert_el(BsElement const& x) {
    return normal_form(invert(x.to_word()), x.model());
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley balls
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> BallGraph::find(BsElement const& x) const {
    auto it = index.find(x);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t default_ball_radius_cap(GroupModel const& model) {
    return model.kind == GroupModel::Kind::integers ? 1'000'000 : 6;
  }

  BallGraph cayley_ball(GroupModel const&          model,
                        std::size_t                radius,
                        std::optional<std::size_t> radius_cap) {
    std::size_t cap = radius_cap.value_or(default_ball_radius_cap(model));
    if (radius > cap) {
      throw CapExceeded("ball radius " + std::to_string(radius)
                        + " exceeds cap " + std::to_string(cap));
    }
    std::vector<Letter> letters;
    for (char g : model.generators()) {
      letters.push_back({g, 1});
      letters.push_back({g, -1});
    }

    BallGraph ball;
    ball.model = model;
    ball.vertices.push_back(BsElement(model));
    ball.distance.push_back(0);
    ball.index.emplace(ball.vertices[0], 0);
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      if (ball.distance[i] == radius) {
        continue;
      }
      for (Letter l : letters) {
        BsElement next
            = multiply(ball.vertices[i], Word(std::string(1, l.symbol())));
        if (ball.index.count(next)) {
          continue;
        }
        ball.index.emplace(next, ball.vertices.size());
        ball.vertices.push_back(std::move(next));
        ball.distance.push_back(ball.distance[i] + 1);
      }
    }
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      for (char g : model.generators()) {
        auto j = ball.find(multiply(ball.vertices[i], Word(std::string(1, g))));
        if (j) {
          ball.edges.push_back({i, g, *j});
        }
      }
    }
    return ball;
  }

  std::string ball_to_json(BallGraph const& ball) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      j["vertices"].push_back(
          {{"element", ball.vertices[i].to_string()},
           {"distance", ball.distance[i]}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto const& e : ball.edges) {
      j["edges"].push_back(
          {{"src", e.src}, {"label", std::string(1, e.label)}, {"dst", e.dst}});
    }
    return j.dump(2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parity colouring of h-paths
  ////////////////////////////////////////////////////////////////////////

  int ParityColoring::of(BsElement const& x) const {
    auto it = _parity.find(x);
    if (it == _parity.end()) {
      throw InputError("no parity recorded for " + x.to_string());
    }
    return it->second;
  }

  ParityColoring h_parity(std::span<BsElement const> vertices,
                          BsElement const&           h) {
    if (h.is_identity()) {
      throw InputError("h_parity: h must have infinite order");
    }
    std::map<BsElement, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      index.emplace(vertices[i], i);
    }
    constexpr std::size_t    none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> next(vertices.size(), none);
    std::vector<std::size_t> prev(vertices.size(), none);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      auto it = index.find(multiply(vertices[i], h));
      if (it != index.end()) {
        next[i]          = it->second;
        prev[it->second] = i;
      }
    }

    std::map<BsElement, int> parity;
    std::vector<bool>        seen(vertices.size(), false);
    for (std::size_t start = 0; start < vertices.size(); ++start) {
      if (prev[start] != none || seen[start]) {
        continue;
      }
      std::vector<std::size_t> path;
      for (std::size_t v = start; v != none; v = next[v]) {
        seen[v] = true;
        path.push_back(v);
      }
      std::size_t root = 0;
      for (std::size_t k = 1; k < path.size(); ++k) {
        if (vertices[path[k]] < vertices[path[root]]) {
          root = k;
        }
      }
      for (std::size_t k = 0; k < path.size(); ++k) {
        std::size_t dist = k > root ? k - root : root - k;
        parity.emplace(vertices[path[k]], static_cast<int>(dist % 2));
      }
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!seen[i]) {
        throw InvariantViolation("h_parity: x -> x·h has a cycle through "
                                 + vertices[i].to_string());
      }
    }
    return ParityColoring(std::move(parity));
  }

  ParityColoring h_parity(BallGraph const& ball, BsElement const& h) {
    return h_parity(std::span<BsElement const>(ball.vertices), h);
  }

}  // namespace nonleighton
