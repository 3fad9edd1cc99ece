#include <doctest.h>

#include <nlohmann/json.hpp>

#include "nonleighton/cover_ball.hpp"
#include "nonleighton/errors.hpp"

using namespace nonleighton;

namespace {

  GroupModel const bs35 = GroupModel::baumslag_solitar(3, 5);

  std::size_t vertex_of(CoverBall const& b, std::string const& w) {
    auto const v = b.find(normal_form(Word(w), bs35));
    REQUIRE(v);
    return *v;
  }

  std::size_t loops_at(CoverBall const& b, std::size_t v) {
    std::size_t k = 0;
    for (auto const& e : b.complex.edges) {
      k += e.label == 'a' && e.src == v && e.dst == v;
    }
    return k;
  }

}  // namespace

TEST_CASE("cover ball of radius 1") {
  CoverBall const b = build_cover_ball(1, 1);
  CHECK(b.core_size() == 5);
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    CHECK(loops_at(b, v) == 1);
    CHECK(b.complex.edges[b.a_loop[v]].src == v);
  }
  // The relator cell at the identity reaches beyond the core.
  auto const f = b.cell_at(CellKind::nonspecial, vertex_of(b, ""));
  REQUIRE(f);
  CHECK(b.complex.boundary_word(*f).str() == "DcccdCCCCC");
  bool leaves_core = false;
  for (std::string prefix : {"D", "Dc", "Dcc", "Dccc", "Dcccd", "DcccdC", "DcccdCC"}) {
    leaves_core = leaves_core || !b.core[vertex_of(b, prefix)];
  }
  CHECK(leaves_core);
  CHECK_FALSE(b.core[vertex_of(b, "Dccc")]);
  CHECK(vertex_of(b, "Dcccd") == vertex_of(b, "ccccc"));
}

TEST_CASE("cell counts") {
  for (std::size_t rho : {1, 2, 3}) {
    for (int eps : {1, -1}) {
      CoverBall const b = build_cover_ball(eps, rho);
      CHECK(b.cells_before_dedup == 2 * b.core_size());
      CHECK(b.count_cells(CellKind::special) >= b.core_size());
      CHECK(b.cells.size() == b.complex.faces.size());
    }
  }
}

TEST_CASE("special cells") {
  CoverBall const b = build_cover_ball(-1, 2);
  BsElement const h = b.h_element();
  for (std::size_t f = 0; f < b.cells.size(); ++f) {
    if (b.cells[f].kind != CellKind::special) {
      CHECK(b.complex.faces[f].size() == 10);
      continue;
    }
    CHECK(b.complex.faces[f].size() == 18);
    std::size_t const base = b.cells[f].base;
    auto const        next = b.find(multiply(b.vertices[base], h));
    REQUIRE(next);
    std::vector<std::size_t> loops;
    for (Step s : b.complex.faces[f]) {
      if (b.complex.edges[s.edge].label == 'a') {
        loops.push_back(s.edge);
      }
    }
    REQUIRE(loops.size() == 2);
    CHECK(loops[0] == b.a_loop[base]);
    CHECK(loops[1] == b.a_loop[*next]);
    CHECK(b.complex.boundary_word(f) == free_reduce(Word("a") + commutator_h() + Word("a")
                                                    + invert(commutator_h())));
  }
}

TEST_CASE("verify_partial_cover") {
  for (int eps : {1, -1}) {
    CoverBall const b = build_cover_ball(eps, 2);
    Report const    r = verify_partial_cover(b);
    CHECK(r.pass());
    CHECK(r.counts().at("core vertices") == 17);
  }
  CoverBallSpec spec;
  spec.radius       = 0;
  CoverBall const z = build_cover_ball(spec);
  CHECK(z.core_size() == 1);
  CHECK(verify_partial_cover(z).pass());
}

TEST_CASE("verify_partial_cover regression matrix") {
  for (std::size_t rho : {1, 2, 3}) {
    for (int eps : {1, -1}) {
      CAPTURE(rho);
      CAPTURE(eps);
      CHECK(verify_partial_cover(build_cover_ball(eps, rho)).pass());
    }
  }
}

TEST_CASE("verify_partial_cover finds a misattached a-loop") {
  CoverBall         b = build_cover_ball(1, 1);
  std::size_t const v = vertex_of(b, "c");
  std::size_t const w = vertex_of(b, "d");
  REQUIRE(v < w);

  // Rerouting a loop breaks the boundaries that use it.
  CoverBall moved                      = b;
  moved.complex.edges[b.a_loop[v]].dst = w;
  CHECK(verify_partial_cover(moved).first_failure()->name == "complex is well formed");

  // A second a-loop keeps the complex well formed but breaks the star.
  b.complex.edges.push_back({v, v, 'a'});
  Report const r = verify_partial_cover(b);
  CHECK_FALSE(r.pass());
  bool found = false;
  for (auto const& c : r.checks()) {
    if (c.name.starts_with("core star")) {
      found = true;
      CHECK_FALSE(c.pass);
      CHECK(c.witness == b.vertices[v].to_string());
    }
  }
  CHECK(found);
}

TEST_CASE("phi") {
  CoverBall const plus  = build_cover_ball(1, 2);
  CoverBall const minus = build_cover_ball(-1, 2);
  PhiMap const    phi   = build_phi(plus, minus);

  std::size_t const e = vertex_of(plus, "");
  std::size_t const h = vertex_of(plus, commutator_h().str());
  CHECK_FALSE(phi.map.flip[plus.a_loop[e]]);
  CHECK(phi.map.flip[plus.a_loop[h]]);

  for (std::size_t f = 0; f < plus.cells.size(); ++f) {
    if (plus.cells[f].kind == CellKind::nonspecial) {
      CHECK(plus.complex.faces[f] == minus.complex.faces[phi.map.face[f]]);
    }
  }
  for (std::size_t x = 0; x < plus.complex.edges.size(); ++x) {
    if (plus.complex.edges[x].label != 'a') {
      CHECK(phi.map.edge[x] == x);
      CHECK_FALSE(phi.map.flip[x]);
    }
  }
  CHECK(verify_phi(plus, minus, phi).pass());
}

TEST_CASE("phi regression matrix and flip/parity agreement") {
  for (std::size_t rho : {1, 2, 3}) {
    CAPTURE(rho);
    CoverBall const plus  = build_cover_ball(1, rho);
    CoverBall const minus = build_cover_ball(-1, rho);
    PhiMap const    phi   = build_phi(plus, minus);
    CHECK(verify_phi(plus, minus, phi).pass());
    BsElement const h = plus.h_element();
    for (std::size_t f = 0; f < plus.cells.size(); ++f) {
      if (plus.cells[f].kind == CellKind::special) {
        BsElement const& v = plus.vertices[plus.cells[f].base];
        CHECK(exactly_one_flip(plus, phi, f)
              == (phi.parity.of(v) != phi.parity.of(multiply(v, h))));
        CHECK(exactly_one_flip(plus, phi, f));
      }
    }
  }
}

TEST_CASE("phi fails when parity(h) is forced to 0") {
  CoverBall const plus   = build_cover_ball(1, 2);
  CoverBall const minus  = build_cover_ball(-1, 2);
  ParityColoring  parity = h_parity(plus.vertices, plus.h_element());
  parity.set(plus.h_element(), 0);
  Report const r = verify_phi(plus, minus, build_phi(plus, minus, parity));
  CHECK_FALSE(r.pass());
  bool found = false;
  for (auto const& c : r.checks()) {
    if (c.name == "exactly one a-loop flipped on every special cell") {
      found = true;
      CHECK_FALSE(c.pass);
      CHECK(c.witness == "special cell at c^0");
    }
  }
  CHECK(found);
}

TEST_CASE("build_phi rejects mismatched balls") {
  CHECK_THROWS_AS(build_phi(build_cover_ball(1, 1), build_cover_ball(-1, 2)), InputError);
  CHECK_THROWS_AS(build_phi(build_cover_ball(1, 1), build_cover_ball(1, 1)), InputError);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(build_cover_ball(1, 5), CapExceeded);
  CHECK_THROWS_AS(build_cover_ball(2, 1), InputError);
  CHECK_THROWS_AS(phi_check(5), CapExceeded);
}

TEST_CASE("reports are deterministic") {
  CHECK(phi_check(2).to_json() == phi_check(2).to_json());
  CHECK(cover_ball_to_json(build_cover_ball(-1, 2)) == cover_ball_to_json(build_cover_ball(-1, 2)));
}

TEST_CASE("torus and Klein bottle") {
  Report const r = torus_klein_demo(10);
  CHECK(r.pass());
  for (std::string const name : {"torus ", "klein "}) {
    CHECK(r.counts().at(name + "vertices") == 21);
    CHECK(r.counts().at(name + "a-loops") == 21);
    CHECK(r.counts().at(name + "b-edges") == 20);
    CHECK(r.counts().at(name + "squares") >= 19);
  }
  CHECK(torus_klein_demo(1).pass());

  GroupModel const z = GroupModel::integers('b');
  ParityColoring   flat;
  for (long k = -10; k <= 10; ++k) {
    flat.set(normal_form(power(Word("b"), k), z), 0);
  }
  CHECK_FALSE(torus_klein_demo(10, flat).pass());
}

TEST_CASE("cover ball export") {
  CoverBall const b = build_cover_ball(1, 1);
  std::string const dot = export_dot(b.complex);
  CHECK(dot.find("v0 -> v0 [label=\"a\"]") != std::string::npos);
  auto const j = nlohmann::json::parse(cover_ball_to_json(b));
  CHECK(j["epsilon"] == 1);
  CHECK(j["vertices"].size() == b.vertices.size());
  CHECK(j["complex"]["faces"].size() == b.cells.size());
  CHECK(import_json(j["complex"].dump()) == b.complex);
}

