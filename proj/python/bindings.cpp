#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lensalex/alexander.hpp"
#include "lensalex/errors.hpp"
#include "lensalex/format.hpp"
#include "lensalex/oracle.hpp"

namespace py = pybind11;
using namespace lensalex;

namespace {

py::dict lens(const std::string& word, int n, long p, long q, bool check) {
  const MixedBraidWord w = parse_braid(word, n);
  const VariableContext ctx = lens_context();
  LensCrossCheck c;
  if (check) c = alex_lens_checked(w, p, q);
  else c.direct = alex_lens(w, p, q);
  const AlexResult& r = c.direct;
  py::dict d;
  d["polynomial"] = to_string(r.polynomial, ctx);
  d["terms"] = py::module_::import("json").attr("loads")(to_json(r.polynomial, ctx).dump());
  d["beta_class"] = r.params.beta_class;
  d["p_prime"] = r.params.p_prime;
  d["beta_prime"] = r.params.beta_prime;
  d["nu"] = r.nu;
  d["determinant"] = to_string(r.determinant, ctx);
  d["factored_route"] = r.factored_route;
  if (check) d["routes_agree"] = c.agree;
  return d;
}

std::vector<std::vector<std::string>> rho(const std::string& word, int n) {
  const RingMatrix m = rho_word(parse_braid(word, n));
  const VariableContext ctx = mixed_context();
  std::vector<std::vector<std::string>> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i].push_back(to_string(m(i, j), ctx));
  return rows;
}

}  // namespace

PYBIND11_MODULE(lens_alex, m) {
  m.doc() = "Alexander polynomials of links in lens spaces from mixed braid words";

  auto base = py::register_exception<Error>(m, "LensAlexError", PyExc_ValueError);
  py::register_exception<NotDivisible>(m, "NotDivisible", base.ptr());
  py::register_exception<SyntaxError>(m, "BraidSyntaxError", base.ptr());
  py::register_exception<InvalidSurgery>(m, "InvalidSurgery", base.ptr());
  py::register_exception<NotAKnot>(m, "NotAKnot", base.ptr());

  m.def("alex_lens", &lens, py::arg("word"), py::arg("n"), py::arg("p"), py::arg("q"),
        py::arg("check") = false,
        "Alexander polynomial of the closure in L(p,q) with diagnostics.");
  m.def(
      "alex_solid_torus",
      [](const std::string& word, int n) {
        return to_string(alex_solid_torus(parse_braid(word, n)), mixed_context());
      },
      py::arg("word"), py::arg("n"));
  m.def(
      "alex_classical_knot",
      [](const std::string& word, int m) {
        return to_string(alex_classical_knot(parse_plain_braid(word, m)), VariableContext{"t"});
      },
      py::arg("word"), py::arg("m"));
  m.def(
      "oracle_two_variable",
      [](const std::string& word, int n) {
        return to_string(oracle_two_variable(parse_braid(word, n)), oracle_context());
      },
      py::arg("word"), py::arg("n"));
  m.def("rho_word", &rho, py::arg("word"), py::arg("n"),
        "rho(word) over Z[a, b] as nested lists of strings, a on the fixed strand.");
}
