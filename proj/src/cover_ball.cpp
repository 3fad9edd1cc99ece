#include "nonleighton/cover_ball.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "nonleighton/errors.hpp"

namespace nonleighton {

  namespace {

    constexpr char loop_label = 'a';

    // Cyclic words equal up to rotation, optionally also up to inversion.
    bool cyclically_equal(Word const& x, Word const& y, bool allow_inverse) {
      if (x.size() != y.size()) {
        return false;
      }
      std::string const doubled = x.str() + x.str();
      if (doubled.find(y.str()) != std::string::npos) {
        return true;
      }
      return allow_inverse
             && doubled.find(invert(y).str()) != std::string::npos;
    }

    std::string where(CoverBall const& b, std::size_t v) {
      return b.vertices[v].to_string();
    }

    // Edge lookup by (vertex, label).  A vertex may carry several edges with
    // the same label in a corrupted complex, so lists are kept.
    struct Incidence {
      std::vector<std::map<char, std::vector<std::size_t>>> out, in;

      explicit Incidence(Complex2 const& c) : out(c.num_vertices), in(c.num_vertices) {
        for (std::size_t e = 0; e < c.edges.size(); ++e) {
          auto const& edge = c.edges[e];
          if (edge.src < c.num_vertices) {
            out[edge.src][edge.label].push_back(e);
          }
          if (edge.dst < c.num_vertices) {
            in[edge.dst][edge.label].push_back(e);
          }
        }
      }

      std::size_t count(std::vector<std::map<char, std::vector<std::size_t>>> const& side,
                        std::size_t v, char label) const {
        auto it = side[v].find(label);
        return it == side[v].end() ? 0 : it->second.size();
      }
    };

    // Follows w from v along uniquely determined edges.  Returns nullopt if a
    // step is missing or ambiguous.
    std::optional<std::pair<BoundaryCycle, std::size_t>>
    trace_in_complex(Complex2 const& c, Incidence const& inc, std::size_t v, Word const& w) {
      BoundaryCycle steps;
      std::size_t   cur = v;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Letter      l    = w[i];
        auto const& side = l.sign > 0 ? inc.out : inc.in;
        auto        it   = side[cur].find(l.generator);
        if (it == side[cur].end() || it->second.size() != 1) {
          return std::nullopt;
        }
        std::size_t e = it->second.front();
        steps.push_back({e, l.sign > 0});
        cur = l.sign > 0 ? c.edges[e].dst : c.edges[e].src;
      }
      return std::make_pair(std::move(steps), cur);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CoverBall
  ////////////////////////////////////////////////////////////////////////

  Presentation CoverBall::presentation() const {
    return amalgamate_with_loop(spec.model.presentation(), spec.h, spec.epsilon);
  }

  std::vector<Word> CoverBall::anchored_relators() const {
    Word const        a(std::string(1, loop_label));
    std::vector<Word> out{
        free_reduce(a + spec.h + power(a, -spec.epsilon) + invert(spec.h))};
    Presentation const base = spec.model.presentation();
    out.insert(out.end(), base.relators().begin(), base.relators().end());
    return out;
  }

  BsElement CoverBall::h_element() const {
    return normal_form(spec.h, spec.model);
  }

  std::optional<std::size_t> CoverBall::find(BsElement const& x) const {
    // Vertices are few enough at desk scale for a linear scan to be fine in
    // tests; the builder keeps its own index.
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == x) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t CoverBall::core_size() const {
    return static_cast<std::size_t>(std::count(core.begin(), core.end(), true));
  }

  std::size_t CoverBall::count_cells(CellKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        cells.begin(), cells.end(), [kind](CoverCell const& c) { return c.kind == kind; }));
  }

  std::optional<std::size_t> CoverBall::cell_at(CellKind kind, std::size_t base) const {
    for (std::size_t f = 0; f < cells.size(); ++f) {
      if (cells[f].kind == kind && cells[f].base == base) {
        return f;
      }
    }
    return std::nullopt;
  }

  CoverBall build_cover_ball(int epsilon, std::size_t radius, std::size_t radius_cap) {
    CoverBallSpec spec;
    spec.epsilon    = epsilon;
    spec.radius     = radius;
    spec.radius_cap = radius_cap;
    return build_cover_ball(spec);
  }

  CoverBall build_cover_ball(CoverBallSpec const& spec) {
    if (spec.epsilon != 1 && spec.epsilon != -1) {
      throw InputError("epsilon must be +1 or -1");
    }
    for (auto g : spec.model.generators()) {
      if (g == loop_label) {
        throw InputError("the group H may not use the generator 'a'");
      }
    }
    std::size_t const cap = spec.radius_cap.value_or(default_ball_radius_cap(spec.model));
    if (spec.radius > cap) {
      throw CapExceeded("cover ball radius " + std::to_string(spec.radius)
                        + " exceeds cap " + std::to_string(cap));
    }

    CoverBall b;
    b.spec                  = spec;
    auto const      anchored = b.anchored_relators();
    BallGraph const ball     = cayley_ball(spec.model, spec.radius, cap);

    std::map<BsElement, std::size_t> index;
    auto add_vertex = [&](BsElement const& x) {
      auto [it, fresh] = index.emplace(x, b.vertices.size());
      if (fresh) {
        b.vertices.push_back(x);
      }
      return it->second;
    };
    for (auto const& v : ball.vertices) {
      add_vertex(v);
    }
    std::size_t const ball_size = b.vertices.size();

    std::vector<Word> star_letters;
    for (char g : spec.model.generators()) {
      star_letters.emplace_back(std::string(1, g));
      star_letters.emplace_back(std::string(1, inverse_symbol(g)));
    }

    if (spec.padding) {
      for (std::size_t v = 0; v < ball_size; ++v) {
        BsElement const x = b.vertices[v];
        for (auto const& l : star_letters) {
          add_vertex(multiply(x, l));
        }
        for (auto const& w : anchored) {
          BsElement cur = x;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].generator != loop_label) {
              cur = multiply(cur, Word(std::string(1, w.symbol(i))));
              add_vertex(cur);
            }
          }
        }
      }
    }

    // 1-skeleton: per vertex its a-loop, then its outgoing X-edges.
    b.complex.num_vertices = b.vertices.size();
    for (std::size_t u = 0; u < b.vertices.size(); ++u) {
      b.a_loop.push_back(b.complex.add_edge(u, u, loop_label));
      for (char g : spec.model.generators()) {
        auto it = index.find(multiply(b.vertices[u], Word(std::string(1, g))));
        if (it != index.end()) {
          b.complex.add_edge(u, it->second, g);
        }
      }
    }

    Incidence const inc(b.complex);
    auto            traces_inside = [&](std::size_t v) {
      for (auto const& l : star_letters) {
        if (!index.count(multiply(b.vertices[v], l))) {
          return false;
        }
      }
      for (auto const& w : anchored) {
        auto t = trace_in_complex(b.complex, inc, v, w);
        if (!t || t->second != v) {
          return false;
        }
      }
      return true;
    };
    b.interior.resize(b.vertices.size());
    for (std::size_t v = 0; v < b.vertices.size(); ++v) {
      b.interior[v] = traces_inside(v);
    }
    b.core.assign(b.vertices.size(), false);
    for (std::size_t v = 0; v < ball_size; ++v) {
      b.core[v] = spec.padding || b.interior[v];
    }

    // Cells: one per (base vertex, relator), deduplicated up to rotation.
    std::set<BoundaryCycle> seen;
    std::size_t const       bases = spec.padding ? ball_size : b.vertices.size();
    for (std::size_t v = 0; v < bases; ++v) {
      for (std::size_t r = 0; r < anchored.size(); ++r) {
        auto t = trace_in_complex(b.complex, inc, v, anchored[r]);
        if (!t) {
          if (spec.padding) {
            throw InvariantViolation("relator trace left the padded ball at "
                                     + where(b, v));
          }
          continue;
        }
        if (t->second != v) {
          throw InvariantViolation("relator " + anchored[r].str()
                                   + " does not close at " + where(b, v));
        }
        ++b.cells_before_dedup;
        if (!seen.insert(canonical_rotation(t->first)).second) {
          continue;
        }
        b.complex.add_face(std::move(t->first));
        b.cells.push_back({r == 0 ? CellKind::special : CellKind::nonspecial, r, v});
      }
    }
    b.complex.validate();
    return b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial-cover verification
  ////////////////////////////////////////////////////////////////////////

  Report verify_partial_cover(CoverBall const& b) {
    Report r("partial cover eps=" + std::string(b.epsilon() > 0 ? "+1" : "-1"));
    r.count("vertices", static_cast<std::int64_t>(b.vertices.size()));
    r.count("core vertices", static_cast<std::int64_t>(b.core_size()));
    r.count("edges", static_cast<std::int64_t>(b.complex.edges.size()));
    r.count("special cells", static_cast<std::int64_t>(b.count_cells(CellKind::special)));
    r.count("nonspecial cells",
            static_cast<std::int64_t>(b.count_cells(CellKind::nonspecial)));

    if (auto defect = b.complex.first_defect()) {
      r.add("complex is well formed", false, *defect);
      return r;
    }
    r.add("complex is well formed", true);

    Incidence const inc(b.complex);
    auto const      gens     = b.spec.model.generators();
    auto const      anchored = b.anchored_relators();

    std::optional<std::string> witness;
    for (std::size_t v = 0; v < b.vertices.size() && !witness; ++v) {
      if (!b.core[v]) {
        continue;
      }
      bool ok = inc.count(inc.out, v, loop_label) == 1
                && inc.count(inc.in, v, loop_label) == 1;
      if (ok) {
        std::size_t e = inc.out[v].at(loop_label).front();
        ok            = b.complex.edges[e].dst == v;
      }
      for (char g : gens) {
        ok = ok && inc.count(inc.out, v, g) == 1 && inc.count(inc.in, v, g) == 1;
      }
      if (!ok) {
        witness = where(b, v);
      }
    }
    r.add("core star: one a-loop and one in/out edge per generator", !witness, witness);

    std::map<BoundaryCycle, std::size_t> face_count;
    for (auto const& f : b.complex.faces) {
      ++face_count[canonical_rotation(f)];
    }
    witness.reset();
    for (std::size_t v = 0; v < b.vertices.size() && !witness; ++v) {
      if (!b.core[v]) {
        continue;
      }
      for (auto const& w : anchored) {
        auto t = trace_in_complex(b.complex, inc, v, w);
        if (!t || t->second != v) {
          witness = where(b, v) + ": " + w.str() + " does not close";
          break;
        }
        auto it = face_count.find(canonical_rotation(t->first));
        if (it == face_count.end() || it->second != 1) {
          witness = where(b, v) + ": " + w.str() + " does not bound exactly one cell";
          break;
        }
      }
    }
    r.add("relators close at core vertices and bound exactly one cell", !witness, witness);

    // Each special cell passes through a_{h'} and a_{h'h}, once each.
    BsElement const h = b.h_element();
    witness.reset();
    for (std::size_t f = 0; f < b.cells.size() && !witness; ++f) {
      if (b.cells[f].kind != CellKind::special) {
        continue;
      }
      std::size_t const base = b.cells[f].base;
      auto const        next = b.find(multiply(b.vertices[base], h));
      std::multiset<std::size_t> loops;
      for (Step s : b.complex.faces[f]) {
        if (b.complex.edges[s.edge].label == loop_label) {
          loops.insert(s.edge);
        }
      }
      std::multiset<std::size_t> expected;
      if (next) {
        expected = {b.a_loop[base], b.a_loop[*next]};
      }
      if (!next || loops != expected) {
        witness = "special cell at " + where(b, base);
      }
    }
    r.add("special cells use the loops at h' and h'h once each", !witness, witness);

    // Projection onto the standard complex of H_eps.
    Presentation const p    = b.presentation();
    Complex2 const     base = standard_complex(p);
    CellMap            proj;
    proj.vertex.assign(b.complex.num_vertices, 0);
    for (auto const& e : b.complex.edges) {
      int g = p.index_of(e.label);
      proj.edge.push_back(g < 0 ? base.edges.size() : static_cast<std::size_t>(g));
      proj.flip.push_back(false);
    }
    for (auto const& c : b.cells) {
      proj.face.push_back(c.relator);
    }
    std::set<std::size_t> core_set;
    for (std::size_t v = 0; v < b.vertices.size(); ++v) {
      if (b.core[v]) {
        core_set.insert(v);
      }
    }
    r.absorb(verify_covering(b.complex, base, proj, core_set), "projection");
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Phi
  ////////////////////////////////////////////////////////////////////////

  PhiMap build_phi(CoverBall const& plus, CoverBall const& minus) {
    return build_phi(plus, minus, h_parity(plus.vertices, plus.h_element()));
  }

  PhiMap build_phi(CoverBall const& plus, CoverBall const& minus, ParityColoring parity) {
    if (plus.epsilon() != 1 || minus.epsilon() != -1) {
      throw InputError("build_phi: expected balls for eps = +1 and eps = -1");
    }
    if (plus.vertices != minus.vertices || plus.spec.h != minus.spec.h
        || !(plus.spec.model == minus.spec.model)) {
      throw InputError("build_phi: vertex-set mismatch between the balls");
    }
    if (plus.complex.edges != minus.complex.edges) {
      throw InputError("build_phi: 1-skeleta differ");
    }

    PhiMap phi;
    phi.map = identity_map(plus.complex);
    for (std::size_t e = 0; e < plus.complex.edges.size(); ++e) {
      auto const& edge = plus.complex.edges[e];
      phi.map.flip[e]  = edge.label == loop_label
                        && parity.of(plus.vertices[edge.src]) == 1;
    }
    std::map<std::tuple<CellKind, std::size_t, std::size_t>, std::size_t> target;
    for (std::size_t f = 0; f < minus.cells.size(); ++f) {
      auto const& c = minus.cells[f];
      target.emplace(std::make_tuple(c.kind, c.relator, c.base), f);
    }
    for (std::size_t f = 0; f < plus.cells.size(); ++f) {
      auto const& c  = plus.cells[f];
      auto        it = target.find(std::make_tuple(c.kind, c.relator, c.base));
      if (it == target.end()) {
        throw InputError("build_phi: no matching cell for the cell at "
                         + plus.vertices[c.base].to_string());
      }
      phi.map.face[f] = it->second;
    }
    phi.parity = std::move(parity);
    return phi;
  }

  bool exactly_one_flip(CoverBall const& plus, PhiMap const& phi, std::size_t face) {
    std::size_t flips = 0;
    for (Step s : plus.complex.faces[face]) {
      if (plus.complex.edges[s.edge].label == loop_label && phi.map.flip[s.edge]) {
        ++flips;
      }
    }
    return flips == 1;
  }

  Report verify_phi(CoverBall const& plus, CoverBall const& minus, PhiMap const& phi) {
    Report r("phi");
    r.absorb(verify_isomorphism(plus.complex, minus.complex, phi.map), "isomorphism");

    bool const total = phi.map.face.size() == plus.complex.faces.size()
                       && phi.map.edge.size() == plus.complex.edges.size()
                       && phi.map.flip.size() == plus.complex.edges.size();
    if (!total) {
      r.add("phi covers every cell", false);
      return r;
    }

    Word const target_relator = special_relator(plus.spec.h, -1);
    BsElement const h         = plus.h_element();

    std::optional<std::string> spell, flip, parity;
    std::size_t                special = 0;
    for (std::size_t f = 0; f < plus.cells.size(); ++f) {
      auto const& cell = plus.cells[f];
      if (cell.kind != CellKind::special) {
        continue;
      }
      ++special;
      std::string const at = "special cell at " + plus.vertices[cell.base].to_string();

      Word image;
      for (Step s : plus.complex.faces[f]) {
        std::size_t e = phi.map.edge[s.edge];
        if (e >= minus.complex.edges.size()) {
          image = Word();
          break;
        }
        image.push_back({minus.complex.edges[e].label,
                         (s.forward != phi.map.flip[s.edge]) ? 1 : -1});
      }
      if (!spell && !cyclically_equal(image, target_relator, true)) {
        spell = at;
      }

      bool const one_flip = exactly_one_flip(plus, phi, f);
      if (!flip && !one_flip) {
        flip = at;
      }

      BsElement const& v    = plus.vertices[cell.base];
      BsElement const  next = multiply(v, h);
      bool const       differ = phi.parity.contains(v) && phi.parity.contains(next)
                          && phi.parity.of(v) != phi.parity.of(next);
      if (!parity && differ != one_flip) {
        parity = at;
      }
    }
    r.add("special cells spell the eps=-1 relator after phi", !spell, spell);
    r.add("exactly one a-loop flipped on every special cell", !flip, flip);
    r.add("flip count agrees with the parity colouring", !parity, parity);
    r.count("special cells", static_cast<std::int64_t>(special));

    r.absorb(verify_partial_cover(plus), "cover eps=+1");
    r.absorb(verify_partial_cover(minus), "cover eps=-1");
    return r;
  }

  Report phi_check(std::size_t radius, std::size_t radius_cap) {
    CoverBall const plus  = build_cover_ball(1, radius, radius_cap);
    CoverBall const minus = build_cover_ball(-1, radius, radius_cap);
    Report          r("phi radius=" + std::to_string(radius));
    r.absorb(verify_phi(plus, minus, build_phi(plus, minus)), "phi");
    r.count("radius", static_cast<std::int64_t>(radius));
    r.count("cells before dedup", static_cast<std::int64_t>(plus.cells_before_dedup));
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Torus / Klein bottle
  ////////////////////////////////////////////////////////////////////////

  Report torus_klein_demo(std::size_t radius, std::optional<ParityColoring> parity_override) {
    if (radius < 1) {
      throw InputError("torus_klein_demo: radius must be at least 1");
    }
    CoverBallSpec spec;
    spec.model   = GroupModel::integers('b');
    spec.h       = Word("b");
    spec.radius  = radius;
    spec.padding = false;

    spec.epsilon          = 1;
    CoverBall const torus = build_cover_ball(spec);
    spec.epsilon          = -1;
    CoverBall const klein = build_cover_ball(spec);

    Report r("torus-klein radius=" + std::to_string(radius));
    r.add("eps=+1 presentation is the torus",
          cyclically_equal(torus.presentation().relators()[0],
                           builtin("torus").relators()[0],
                           true));
    r.add("eps=-1 presentation is the Klein bottle",
          cyclically_equal(klein.presentation().relators()[0],
                           builtin("klein").relators()[0],
                           true));
    for (auto const* ball : {&torus, &klein}) {
      std::string const name = ball == &torus ? "torus " : "klein ";
      std::size_t       b_edges = 0;
      for (auto const& e : ball->complex.edges) {
        b_edges += e.label == 'b';
      }
      r.count(name + "vertices", static_cast<std::int64_t>(ball->vertices.size()));
      r.count(name + "a-loops", static_cast<std::int64_t>(ball->a_loop.size()));
      r.count(name + "b-edges", static_cast<std::int64_t>(b_edges));
      r.count(name + "squares", static_cast<std::int64_t>(ball->complex.faces.size()));
    }
    PhiMap const phi = parity_override ? build_phi(torus, klein, *parity_override)
                                       : build_phi(torus, klein);
    r.absorb(verify_phi(torus, klein, phi), "phi");
    return r;
  }

  std::string cover_ball_to_json(CoverBall const& b) {
    nlohmann::ordered_json j;
    j["epsilon"] = b.epsilon();
    j["radius"]  = b.spec.radius;
    j["h"]       = b.spec.h.str();
    j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < b.vertices.size(); ++v) {
      j["vertices"].push_back({{"id", v},
                               {"element", b.vertices[v].to_string()},
                               {"core", static_cast<bool>(b.core[v])}});
    }
    j["cells"] = nlohmann::ordered_json::array();
    for (std::size_t f = 0; f < b.cells.size(); ++f) {
      j["cells"].push_back({{"face", f},
                            {"kind", b.cells[f].kind == CellKind::special ? "special"
                                                                          : "nonspecial"},
                            {"base", b.cells[f].base}});
    }
    j["complex"] = nlohmann::ordered_json::parse(export_json(b.complex));
    return j.dump(2);
  }

}  // namespace nonleighton
