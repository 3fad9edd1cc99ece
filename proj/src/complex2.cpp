#include "nonleighton/complex2.hpp"

#include <algorithm>
#include <numeric>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nonleighton/errors.hpp"

namespace nonleighton {

  BoundaryCycle canonical_rotation(BoundaryCycle const& cycle) {
    BoundaryCycle best = cycle;
    BoundaryCycle rot  = cycle;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) {
        best = rot;
      }
    }
    return best;
  }

  BoundaryCycle reverse_cycle(BoundaryCycle const& cycle) {
    BoundaryCycle out;
    out.reserve(cycle.size());
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) {
      out.push_back(it->reversed());
    }
    return out;
  }

  BoundaryCycle canonical_unoriented(BoundaryCycle const& cycle) {
    return std::min(canonical_rotation(cycle),
                    canonical_rotation(reverse_cycle(cycle)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Complex2
  ////////////////////////////////////////////////////////////////////////

  std::size_t Complex2::add_edge(std::size_t src, std::size_t dst, char label) {
    edges.push_back({src, dst, label});
    return edges.size() - 1;
  }

  std::size_t Complex2::add_face(BoundaryCycle boundary) {
    faces.push_back(std::move(boundary));
    return faces.size() - 1;
  }

  std::size_t Complex2::step_source(Step s) const {
    auto const& e = edges.at(s.edge);
    return s.forward ? e.src : e.dst;
  }

  std::size_t Complex2::step_target(Step s) const {
    auto const& e = edges.at(s.edge);
    return s.forward ? e.dst : e.src;
  }

  std::optional<std::string> Complex2::first_defect() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].src >= num_vertices || edges[i].dst >= num_vertices) {
        return "edge " + std::to_string(i) + " has an endpoint out of range";
      }
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
      auto const& b = faces[f];
      if (b.empty()) {
        return "face " + std::to_string(f) + " has an empty boundary";
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].edge >= edges.size()) {
          return "face " + std::to_string(f) + " uses an unknown edge";
        }
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (step_target(b[i]) != step_source(b[(i + 1) % b.size()])) {
          return "face " + std::to_string(f) + " boundary is not a closed path";
        }
      }
    }
    return std::nullopt;
  }

  void Complex2::validate() const {
    if (auto defect = first_defect()) {
      throw InvariantViolation(*defect);
    }
  }

  Word Complex2::boundary_word(std::size_t face) const {
    Word w;
    for (Step s : faces.at(face)) {
      w.push_back({edges.at(s.edge).label, s.forward ? 1 : -1});
    }
    return w;
  }

  long euler_characteristic(Complex2 const& c) {
    return c.euler_characteristic();
  }

  CellMap identity_map(Complex2 const& c) {
    CellMap m;
    m.vertex.resize(c.num_vertices);
    m.edge.resize(c.edges.size());
    m.flip.assign(c.edges.size(), false);
    m.face.resize(c.faces.size());
    std::iota(m.vertex.begin(), m.vertex.end(), std::size_t(0));
    std::iota(m.edge.begin(), m.edge.end(), std::size_t(0));
    std::iota(m.face.begin(), m.face.end(), std::size_t(0));
    return m;
  }

  namespace {

    std::vector<std::size_t> invert_bijection(std::vector<std::size_t> const& f,
                                              char const*                     what) {
      std::vector<std::size_t> g(f.size(), f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= f.size() || g[f[i]] != f.size()) {
          throw InputError(std::string("inverse: ") + what
                           + " map is not a bijection");
        }
        g[f[i]] = i;
      }
      return g;
    }

  }  // namespace

  CellMap inverse(CellMap const& m) {
    CellMap out;
    out.vertex = invert_bijection(m.vertex, "vertex");
    out.edge   = invert_bijection(m.edge, "edge");
    out.face   = invert_bijection(m.face, "face");
    out.flip.resize(m.flip.size());
    for (std::size_t e = 0; e < m.edge.size(); ++e) {
      out.flip[m.edge[e]] = m.flip[e];
    }
    return out;
  }

  Complex2 standard_complex(Presentation const& p) {
    Complex2 c;
    c.add_vertex();
    for (char g : p.generators()) {
      c.add_edge(0, 0, g);
    }
    for (auto const& r : p.relators()) {
      if (r.empty()) {
        throw InputError("standard_complex: empty relator has no boundary");
      }
      BoundaryCycle b;
      for (std::size_t i = 0; i < r.size(); ++i) {
        b.push_back({static_cast<std::size_t>(p.index_of(r[i].generator)),
                     r[i].sign > 0});
      }
      c.add_face(std::move(b));
    }
    c.validate();
    return c;
  }

  std::pair<Complex2, CellMap> build_cover_from_table(Presentation const& p,
                                                      CosetTable const&   t) {
    if (!t.is_complete()) {
      throw InputError("build_cover_from_table: coset table is incomplete");
    }
    if (t.generators() != p.generators()) {
      throw InputError("build_cover_from_table: table and presentation have "
                       "different generators");
    }
    std::size_t const n    = t.size();
    std::size_t const rank = p.rank();
    Complex2          cover;
    CellMap           m;
    for (std::size_t i = 0; i < n; ++i) {
      cover.add_vertex();
      m.vertex.push_back(0);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t g = 0; g < rank; ++g) {
        cover.add_edge(i, static_cast<std::size_t>(t.image(i, g)), p.generators()[g]);
        m.edge.push_back(g);
        m.flip.push_back(false);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < p.relators().size(); ++r) {
        Word const& w = p.relators()[r];
        if (w.empty()) {
          throw InputError("build_cover_from_table: empty relator");
        }
        BoundaryCycle b;
        std::size_t   cur = i;
        for (std::size_t k = 0; k < w.size(); ++k) {
          auto g = static_cast<std::size_t>(p.index_of(w[k].generator));
          if (w[k].sign > 0) {
            b.push_back({cur * rank + g, true});
            cur = static_cast<std::size_t>(t.image(cur, g));
          } else {
            cur = static_cast<std::size_t>(t.preimage(cur, g));
            b.push_back({cur * rank + g, false});
          }
        }
        if (cur != i) {
          throw InputError("build_cover_from_table: relator " + w.str()
                           + " does not close at coset " + std::to_string(i + 1));
        }
        cover.add_face(std::move(b));
        m.face.push_back(r);
      }
    }
    cover.validate();
    return {std::move(cover), std::move(m)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Edge ends at each vertex: (edge id, outgoing?).
    using Star = std::vector<std::pair<std::size_t, bool>>;

    std::vector<Star> stars(Complex2 const& c) {
      std::vector<Star> out(c.num_vertices);
      for (std::size_t e = 0; e < c.edges.size(); ++e) {
        auto const& edge = c.edges[e];
        if (edge.src < c.num_vertices) {
          out[edge.src].emplace_back(e, true);
        }
        if (edge.dst < c.num_vertices) {
          out[edge.dst].emplace_back(e, false);
        }
      }
      return out;
    }

    bool map_is_total(Complex2 const& src, Complex2 const& dst, CellMap const& m) {
      if (m.vertex.size() != src.num_vertices || m.edge.size() != src.edges.size()
          || m.flip.size() != src.edges.size() || m.face.size() != src.faces.size()) {
        return false;
      }
      auto in_range = [](std::vector<std::size_t> const& v, std::size_t n) {
        return std::all_of(v.begin(), v.end(), [n](std::size_t x) { return x < n; });
      };
      return in_range(m.vertex, dst.num_vertices) && in_range(m.edge, dst.edges.size())
             && in_range(m.face, dst.faces.size());
    }

    BoundaryCycle image_of(BoundaryCycle const& b, CellMap const& m) {
      BoundaryCycle out;
      out.reserve(b.size());
      for (Step s : b) {
        out.push_back({m.edge[s.edge], s.forward != m.flip[s.edge]});
      }
      return out;
    }

    bool is_bijection(std::vector<std::size_t> const& f, std::size_t n) {
      if (f.size() != n) {
        return false;
      }
      std::vector<bool> hit(n, false);
      for (std::size_t x : f) {
        if (x >= n || hit[x]) {
          return false;
        }
        hit[x] = true;
      }
      return true;
    }

  }  // namespace

  Report verify_covering(Complex2 const&                      cover,
                         Complex2 const&                      base,
                         CellMap const&                       m,
                         std::optional<std::set<std::size_t>> only_at) {
    Report r("covering");
    bool   total = map_is_total(cover, base, m);
    r.add("cell map is total", total);
    if (!total) {
      return r;
    }
    if (auto defect = cover.first_defect()) {
      r.add("cover is a well-formed complex", false, *defect);
      return r;
    }

    std::optional<std::string> witness;
    for (std::size_t e = 0; e < cover.edges.size() && !witness; ++e) {
      auto const& ce = cover.edges[e];
      auto const& be = base.edges[m.edge[e]];
      if (m.flip[e] || ce.label != be.label || be.src != m.vertex[ce.src]
          || be.dst != m.vertex[ce.dst]) {
        witness = "edge " + std::to_string(e);
      }
    }
    r.add("edges keep label and direction", !witness, witness);

    witness.reset();
    auto const cover_stars = stars(cover);
    auto const base_stars  = stars(base);
    for (std::size_t v = 0; v < cover.num_vertices && !witness; ++v) {
      if (only_at && !only_at->count(v)) {
        continue;
      }
      Star image;
      for (auto [e, out] : cover_stars[v]) {
        image.emplace_back(m.edge[e], out);
      }
      Star expected = base_stars[m.vertex[v]];
      std::sort(image.begin(), image.end());
      std::sort(expected.begin(), expected.end());
      if (image != expected) {
        witness = "vertex " + std::to_string(v);
      }
    }
    r.add("vertex stars map bijectively", !witness, witness);

    witness.reset();
    for (std::size_t f = 0; f < cover.faces.size() && !witness; ++f) {
      if (canonical_rotation(image_of(cover.faces[f], m))
          != canonical_rotation(base.faces[m.face[f]])) {
        witness = "face " + std::to_string(f);
      }
    }
    r.add("face boundaries map to base boundaries up to rotation", !witness, witness);

    if (!only_at) {
      std::vector<std::size_t> vcount(base.num_vertices), ecount(base.edges.size()),
          fcount(base.faces.size());
      for (auto x : m.vertex) {
        ++vcount[x];
      }
      for (auto x : m.edge) {
        ++ecount[x];
      }
      for (auto x : m.face) {
        ++fcount[x];
      }
      std::size_t const degree = vcount.empty() ? 0 : vcount[0];
      witness.reset();
      for (std::size_t i = 0; i < vcount.size() && !witness; ++i) {
        if (vcount[i] != degree) {
          witness = "base vertex " + std::to_string(i);
        }
      }
      for (std::size_t i = 0; i < ecount.size() && !witness; ++i) {
        if (ecount[i] != degree) {
          witness = "base edge " + std::to_string(i);
        }
      }
      for (std::size_t i = 0; i < fcount.size() && !witness; ++i) {
        if (fcount[i] != degree) {
          witness = "base face " + std::to_string(i);
        }
      }
      r.add("every base cell has degree-many preimages", !witness, witness);
      r.count("degree", static_cast<std::int64_t>(degree));
    }
    return r;
  }

  Report verify_isomorphism(Complex2 const& c1, Complex2 const& c2, CellMap const& m) {
    Report r("isomorphism");
    bool   total = map_is_total(c1, c2, m);
    r.add("cell map is total", total);
    if (!total) {
      return r;
    }
    r.add("vertex map is a bijection", is_bijection(m.vertex, c2.num_vertices));
    r.add("edge map is a bijection", is_bijection(m.edge, c2.edges.size()));
    r.add("face map is a bijection", is_bijection(m.face, c2.faces.size()));

    std::optional<std::string> witness;
    for (std::size_t e = 0; e < c1.edges.size() && !witness; ++e) {
      auto const& x = c1.edges[e];
      auto const& y = c2.edges[m.edge[e]];
      std::size_t src = m.vertex[x.src], dst = m.vertex[x.dst];
      if (m.flip[e]) {
        std::swap(src, dst);
      }
      if (x.label != y.label || y.src != src || y.dst != dst) {
        witness = "edge " + std::to_string(e);
      }
    }
    r.add("edges keep labels; flips match endpoints", !witness, witness);

    witness.reset();
    for (std::size_t f = 0; f < c1.faces.size() && !witness; ++f) {
      if (canonical_unoriented(image_of(c1.faces[f], m))
          != canonical_unoriented(c2.faces[m.face[f]])) {
        witness = "face " + std::to_string(f);
      }
    }
    r.add("face boundaries map up to rotation and reversal", !witness, witness);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Export / import
  ////////////////////////////////////////////////////////////////////////

  std::string export_dot(Complex2 const& c) {
    std::ostringstream out;
    out << "digraph complex {\n";
    for (std::size_t v = 0; v < c.num_vertices; ++v) {
      out << "  v" << v << ";\n";
    }
    for (auto const& e : c.edges) {
      out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string export_json(Complex2 const& c) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < c.num_vertices; ++v) {
      j["vertices"].push_back(v);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
      j["edges"].push_back({{"id", e},
                            {"src", c.edges[e].src},
                            {"dst", c.edges[e].dst},
                            {"label", std::string(1, c.edges[e].label)}});
    }
    j["faces"] = nlohmann::ordered_json::array();
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
      nlohmann::ordered_json boundary = nlohmann::ordered_json::array();
      for (Step s : c.faces[f]) {
        boundary.push_back({{"edge", s.edge}, {"dir", s.forward ? "+" : "-"}});
      }
      j["faces"].push_back({{"id", f}, {"boundary", std::move(boundary)}});
    }
    return j.dump(2);
  }

  Complex2 import_json(std::string const& text) {
    Complex2 c;
    try {
      auto const j = nlohmann::json::parse(text);
      auto const& vertices = j.at("vertices");
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].get<std::size_t>() != i) {
          throw InputError("import_json: vertex ids must be 0..V-1 in order");
        }
      }
      c.num_vertices = vertices.size();
      for (std::size_t i = 0; i < j.at("edges").size(); ++i) {
        auto const& e     = j.at("edges")[i];
        auto const  label = e.at("label").get<std::string>();
        if (e.at("id").get<std::size_t>() != i || label.size() != 1) {
          throw InputError("import_json: malformed edge " + std::to_string(i));
        }
        c.add_edge(e.at("src").get<std::size_t>(), e.at("dst").get<std::size_t>(), label[0]);
      }
      for (std::size_t i = 0; i < j.at("faces").size(); ++i) {
        auto const& f = j.at("faces")[i];
        if (f.at("id").get<std::size_t>() != i) {
          throw InputError("import_json: face ids must be 0..F-1 in order");
        }
        BoundaryCycle b;
        for (auto const& s : f.at("boundary")) {
          auto dir = s.at("dir").get<std::string>();
          if (dir != "+" && dir != "-") {
            throw InputError("import_json: dir must be \"+\" or \"-\"");
          }
          b.push_back({s.at("edge").get<std::size_t>(), dir == "+"});
        }
        c.add_face(std::move(b));
      }
    } catch (nlohmann::json::exception const& e) {
      throw InputError(std::string("import_json: ") + e.what());
    }
    if (auto defect = c.first_defect()) {
      throw InputError("import_json: " + *defect);
    }
    return c;
  }

}  // namespace nonleighton
