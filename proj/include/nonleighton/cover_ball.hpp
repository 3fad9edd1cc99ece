#pragma once

// Finite pieces of the covers K^_eps of the standard complexes of
//   H_eps = < a, X | a^h = a^eps, R >
// whose vertices are the elements of H = < X | R >, each carrying one a-loop,
// together with the map Phi between the eps = +1 and eps = -1 pieces.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nonleighton/bsgroup.hpp"
#include "nonleighton/complex2.hpp"
#include "nonleighton/report.hpp"
#include "nonleighton/words.hpp"

namespace nonleighton {

  enum class CellKind { special, nonspecial };

  // A 2-cell of the ball.  `base` is the vertex the relator is traced from:
  // for a special cell it is h' where the loops a_{h'} and a_{h'h} sit.
  struct CoverCell {
    CellKind    kind;
    std::size_t relator;  // index into CoverBall::presentation().relators()
    std::size_t base;
  };

  struct CoverBallSpec {
    GroupModel  model = GroupModel::baumslag_solitar(3, 5);
    Word        h     = commutator_h();
    int         epsilon = 1;
    std::size_t radius  = 1;
    // With padding, every intermediate point of the relator traces from core
    // vertices is added and the core is the whole Cayley ball.  Without it
    // the vertex set is the Cayley ball, cells are kept only when their trace
    // stays inside, and the core is the set of interior vertices.
    bool        padding = true;
    std::optional<std::size_t> radius_cap;
  };

  inline constexpr std::size_t default_cover_radius_cap = 4;

  struct CoverBall {
    CoverBallSpec          spec;
    std::vector<BsElement> vertices;  // index = vertex id in `complex`
    std::vector<bool>      core;
    std::vector<bool>      interior;
    std::vector<std::size_t> a_loop;  // edge id of the a-loop at each vertex
    Complex2               complex;
    std::vector<CoverCell> cells;     // parallel to complex.faces
    std::size_t            cells_before_dedup = 0;

    int epsilon() const noexcept {
      return spec.epsilon;
    }
    // H_eps with generators a, X and relators h^-1 a h a^-eps, R.
    Presentation presentation() const;
    // Rotations traced from a cell's base vertex: a h a^-eps h^-1 for the
    // special relator, the relator itself otherwise.
    std::vector<Word> anchored_relators() const;
    BsElement h_element() const;

    std::optional<std::size_t> find(BsElement const& x) const;
    std::size_t core_size() const;
    std::size_t count_cells(CellKind kind) const;
    std::optional<std::size_t> cell_at(CellKind kind, std::size_t base) const;
  };

  // The main instance: H = BS(3, 5), h = [c^d, c], padded.
  CoverBall build_cover_ball(int epsilon, std::size_t radius,
                             std::size_t radius_cap = default_cover_radius_cap);
  CoverBall build_cover_ball(CoverBallSpec const& spec);

  // At every core vertex: the star is one a-loop plus one incoming and one
  // outgoing edge per generator of H; every anchored relator traced from the
  // vertex closes and bounds exactly one cell; the projection to the standard
  // complex is a covering at the core stars.
  Report verify_partial_cover(CoverBall const& ball);

  struct PhiMap {
    CellMap        map;
    ParityColoring parity;
  };

  // Identity on vertices, X-edges and nonspecial cells; the a-loop at v is
  // flipped iff parity(v) = 1; special cells correspond by base vertex.
  PhiMap build_phi(CoverBall const& plus, CoverBall const& minus);
  PhiMap build_phi(CoverBall const& plus,
                   CoverBall const& minus,
                   ParityColoring   parity);

  Report verify_phi(CoverBall const& plus, CoverBall const& minus, PhiMap const& phi);

  // Both Phi formulations agree: one flipped loop per special cell, and
  // parity(base) != parity(base·h).
  bool exactly_one_flip(CoverBall const& plus, PhiMap const& phi, std::size_t face);

  // Phi on strips of the covers of the torus and the Klein bottle: H = Z = <b>,
  // h = b, no padding.  `parity_override` replaces the computed colouring.
  Report torus_klein_demo(std::size_t radius,
                          std::optional<ParityColoring> parity_override = {});

  // Build both balls, Phi and verify; the CLI `phi` subcommand.
  Report phi_check(std::size_t radius,
                   std::size_t radius_cap = default_cover_radius_cap);

  std::string cover_ball_to_json(CoverBall const& ball);

}  // namespace nonleighton
