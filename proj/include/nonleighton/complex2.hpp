#pragma once

// Combinatorial 2-complexes: vertices 0..V-1, directed labelled edges, and
// faces whose boundaries are closed edge paths.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nonleighton/enumerate.hpp"
#include "nonleighton/report.hpp"
#include "nonleighton/words.hpp"

namespace nonleighton {

  struct Edge {
    std::size_t src;
    std::size_t dst;
    char        label;

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  struct Step {
    std::size_t edge;
    bool        forward;

    Step reversed() const noexcept {
      return {edge, !forward};
    }
    friend bool operator==(Step const&, Step const&) = default;
    friend auto operator<=>(Step const&, Step const&) = default;
  };

  using BoundaryCycle = std::vector<Step>;

  // Least rotation of the cycle.
  BoundaryCycle canonical_rotation(BoundaryCycle const& cycle);
  // Least rotation of the cycle or of its reversal.
  BoundaryCycle canonical_unoriented(BoundaryCycle const& cycle);
  BoundaryCycle reverse_cycle(BoundaryCycle const& cycle);

  // Plain aggregate; ids are positions.  Builders call validate().
  struct Complex2 {
    std::size_t                num_vertices = 0;
    std::vector<Edge>          edges;
    std::vector<BoundaryCycle> faces;

    std::size_t add_vertex() {
      return num_vertices++;
    }
    std::size_t add_edge(std::size_t src, std::size_t dst, char label);
    std::size_t add_face(BoundaryCycle boundary);

    // Throws InvariantViolation when an edge endpoint is out of range or a
    // face boundary is empty, disconnected or not closed.
    void validate() const;
    std::optional<std::string> first_defect() const;

    std::size_t step_source(Step s) const;
    std::size_t step_target(Step s) const;
    // Boundary label, e.g. "DcccdCCCCC".
    Word boundary_word(std::size_t face) const;

    long euler_characteristic() const noexcept {
      return static_cast<long>(num_vertices) - static_cast<long>(edges.size())
             + static_cast<long>(faces.size());
    }

    friend bool operator==(Complex2 const&, Complex2 const&) = default;
  };

  long euler_characteristic(Complex2 const& c);

  // Cellular map between complexes; flip[e] means edge e is sent to its image
  // traversed backwards.
  struct CellMap {
    std::vector<std::size_t> vertex;
    std::vector<std::size_t> edge;
    std::vector<bool>        flip;
    std::vector<std::size_t> face;
  };

  CellMap identity_map(Complex2 const& c);
  // Requires bijective vertex, edge and face maps.
  CellMap inverse(CellMap const& m);

  // One vertex, a loop per generator (edge id = generator index) and a face
  // per relator (face id = relator index).  Empty relators are rejected.
  Complex2 standard_complex(Presentation const& p);

  // Vertices are cosets, edge coset·g has id coset·rank + g, the face of
  // relator r traced from coset i has id i·|R| + r.  The map is the covering
  // projection onto standard_complex(p).
  std::pair<Complex2, CellMap> build_cover_from_table(Presentation const& p,
                                                      CosetTable const&   t);

  // Label- and direction-preserving covering check.  With `only_at` set, the
  // star condition is checked only at those vertices and the preimage-count
  // condition is skipped.
  Report verify_covering(Complex2 const&                      cover,
                         Complex2 const&                      base,
                         CellMap const&                       m,
                         std::optional<std::set<std::size_t>> only_at = {});

  // Bijective, label-preserving, flips consistent with endpoints, and face
  // boundaries preserved up to rotation and reversal.
  Report verify_isomorphism(Complex2 const& c1,
                            Complex2 const& c2,
                            CellMap const&  m);

  std::string export_dot(Complex2 const& c);
  std::string export_json(Complex2 const& c);
  Complex2 import_json(std::string const& text);

}  // namespace nonleighton
