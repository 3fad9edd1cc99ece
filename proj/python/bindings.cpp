#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonleighton/bsgroup.hpp"
#include "nonleighton/complex2.hpp"
#include "nonleighton/cover_ball.hpp"
#include "nonleighton/enumerate.hpp"
#include "nonleighton/errors.hpp"
#include "nonleighton/json_io.hpp"
#include "nonleighton/lemmas.hpp"
#include "nonleighton/words.hpp"

namespace py = pybind11;
namespace nl = nonleighton;

namespace {

  nl::Presentation load(std::string const& name_or_text) {
    if (name_or_text.find('<') != std::string::npos) {
      return nl::parse_presentation(name_or_text);
    }
    return nl::builtin(name_or_text);
  }

  std::vector<nl::Word> words(std::vector<std::string> const& ws) {
    return {ws.begin(), ws.end()};
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Word, coset-table and cover-complex routines for BS(3,5) and friends.";

  py::register_exception<nl::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<nl::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def("free_reduce", [](std::string const& w) { return nl::free_reduce(nl::Word(w)).str(); });
  m.def("cyclic_reduce",
        [](std::string const& w) { return nl::cyclic_reduce(nl::Word(w)).str(); });
  m.def("commutator_h", [] { return nl::commutator_h().str(); });
  m.def("builtin_names", [] { return nl::builtin_names(); });
  m.def("presentation", [](std::string const& p) { return nl::to_string(load(p)); },
        py::arg("name_or_text"));

  m.def("standard_complex_json",
        [](std::string const& p) { return nl::export_json(nl::standard_complex(load(p))); });
  m.def("low_index_json",
        [](std::string const& p, std::size_t n) {
          return nl::tables_to_json(nl::low_index(load(p), n));
        },
        py::arg("presentation"), py::arg("n_max"));
  m.def("todd_coxeter_json",
        [](std::string const& p, std::vector<std::string> const& gens, std::size_t max) {
          return nl::table_to_json(nl::todd_coxeter(load(p), words(gens), max));
        },
        py::arg("presentation"), py::arg("subgroup"), py::arg("max_cosets") = 100000);
  m.def("homs_json",
        [](std::string const& p, std::size_t degree) {
          return nl::homs_to_json(nl::enumerate_homs(load(p), degree));
        },
        py::arg("presentation"), py::arg("degree"));
  m.def("abelianization", [](std::string const& p) { return nl::abelianization(load(p)); });

  m.def("normal_form",
        [](std::string const& w) {
          return nl::normal_form(nl::Word(w), nl::GroupModel::baumslag_solitar(3, 5))
              .to_string();
        });
  m.def("cayley_ball_json",
        [](std::size_t radius) {
          return nl::ball_to_json(
              nl::cayley_ball(nl::GroupModel::baumslag_solitar(3, 5), radius));
        });

  m.def("lemma_commutator_json",
        [](std::size_t n, std::size_t d) { return nl::lemma_commutator_check(n, d).to_json(); },
        py::arg("n_max"), py::arg("hom_degree_max"));
  m.def("lemma_bottle_json",
        [](std::size_t n) { return nl::lemma_bottle_consequence_check(n).to_json(); },
        py::arg("n_max"));
  m.def("abelian_consistency_json", [] { return nl::abelian_consistency_check().to_json(); });
  m.def("partial_cover_json",
        [](int eps, std::size_t radius) {
          return nl::verify_partial_cover(nl::build_cover_ball(eps, radius)).to_json();
        },
        py::arg("epsilon"), py::arg("radius"));
  m.def("phi_json", [](std::size_t radius) { return nl::phi_check(radius).to_json(); },
        py::arg("radius"));
  m.def("torus_klein_json",
        [](std::size_t radius) { return nl::torus_klein_demo(radius).to_json(); },
        py::arg("radius") = 10);
  m.def("cover_ball_json",
        [](int eps, std::size_t radius) {
          return nl::cover_ball_to_json(nl::build_cover_ball(eps, radius));
        },
        py::arg("epsilon"), py::arg("radius"));
}
