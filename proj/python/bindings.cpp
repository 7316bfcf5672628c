// Python extension. Every operation returns the same JSON documents the
// CLI produces, serialized to a string; the pure-python wrapper parses
// them. Keeping the boundary at JSON means the python API can never
// drift from the file formats.

#include <pybind11/pybind11.h>

#include <cstdint>

#include "truncdet/census.hpp"
#include "truncdet/groebner.hpp"
#include "truncdet/ideal.hpp"
#include "truncdet/points.hpp"
#include "truncdet/report_json.hpp"
#include "truncdet/scalar.hpp"
#include "truncdet/stanley.hpp"

namespace py = pybind11;
using namespace truncdet;

namespace {

FieldRef field_of(std::uint32_t p) {
  return p == 0 ? FieldRef::rationals() : FieldRef::prime(p);
}

std::string ideal_doc(int m, int n, int r, int k, std::uint32_t p) {
  return dump_json(ideal_json(generate_ideal(MatrixShape{m, n, r, k}, field_of(p))));
}

std::string ideal_text_doc(int m, int n, int r, int k, std::uint32_t p) {
  return ideal_text(generate_ideal(MatrixShape{m, n, r, k}, field_of(p)));
}

std::string gb_check_doc(int m, int k, std::uint64_t max_steps) {
  ReductionCaps caps;
  caps.max_steps = max_steps;
  return dump_json(gb_report_json(gb_check(m, k, caps)));
}

std::string hilbert_doc(int m, int k, int max_degree) {
  return dump_json(hilbert_json(m, k, max_degree));
}

std::string census_doc(int m, int n, int r, int k) {
  return dump_json(census_json(census_general(m, n, r, k)));
}

std::string count_doc(int m, int n, int r, int k, std::uint32_t q, bool ring_level,
                      std::uint64_t cap) {
  const MatrixShape shape{m, n, r, k};
  const CountResult result =
      ring_level ? count_points_ringlevel(shape, q, cap) : count_points(shape, q, cap);
  return dump_json(count_json(result));
}

std::string separation_doc(int m, int n, int k, int s, int alpha, std::uint32_t p) {
  return dump_json(separation_json(separation_witness(m, n, k, s, alpha, field_of(p))));
}

std::string intersection_doc(int m, int n, int k, std::uint32_t p) {
  return dump_json(intersection_json(intersection_witness(m, n, k, field_of(p))));
}

} // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "determinantal ideals of matrices over truncated polynomial rings";

  py::register_exception<cap_exceeded>(mod, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<budget_exceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);

  mod.def("ideal_json", &ideal_doc, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("k"),
          py::arg("p") = 0,
          "Generators of I^{m,n}_{r,k} as a JSON document (p=0 for the rationals).");
  mod.def("ideal_text", &ideal_text_doc, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("k"),
          py::arg("p") = 0, "Generators in the textual exchange format.");
  mod.def("gb_check_json", &gb_check_doc, py::arg("m"), py::arg("k"),
          py::arg("max_steps") = ReductionCaps{}.max_steps,
          "Groebner verification report for d_0..d_{k-1} of the m x m determinant.");
  mod.def("hilbert_json", &hilbert_doc, py::arg("m"), py::arg("k"), py::arg("max_degree"),
          "Hilbert function values, f-vector and degree of the maximal-minor quotient.");
  mod.def("census_json", &census_doc, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("k"),
          "Irreducible component census of Z^{m,n}_{r,k}.");
  mod.def("count_json", &count_doc, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("k"),
          py::arg("q"), py::arg("ring_level") = false, py::arg("cap") = std::uint64_t{1} << 26,
          "Exhaustive F_q point count; raises CapExceeded past the candidate cap.");
  mod.def("separation_json", &separation_doc, py::arg("m"), py::arg("n"), py::arg("k"),
          py::arg("s"), py::arg("alpha"), py::arg("p") = 0,
          "Witness point separating X_s from the smaller-rank components.");
  mod.def("intersection_json", &intersection_doc, py::arg("m"), py::arg("n"), py::arg("k"),
          py::arg("p") = 0, "Witness point on the intersection of two components.");
  mod.def("variety_codim", &variety_codim, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("k"),
          "Codimension of Z^{m,n}_{r,k} inside the mnk-dimensional affine space.");
}
