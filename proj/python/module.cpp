#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "yokotl/catalog.hpp"
#include "yokotl/esystem.hpp"
#include "yokotl/invariants.hpp"
#include "yokotl/limits.hpp"
#include "yokotl/quotients.hpp"
#include "yokotl/ring/parse.hpp"

namespace py = pybind11;
using namespace yokotl;

namespace {

std::string render(const RationalFunction& f) {
  RationalFunction g = canonical_form(f);
  return g.is_polynomial() ? g.num().str() : g.str();
}

std::string render(const LaurentPolynomial& p) { return p.str(); }

std::optional<CycloRational> constant(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  RationalFunction f = parse_expression(*text);
  f.simplify();
  if (!f.is_polynomial() || !f.num().is_constant()) throw std::invalid_argument("E must be a rational constant");
  return f.num().constant_term();
}

std::set<int> full_set(int d) {
  std::set<int> D;
  for (int m = 0; m < d; ++m) D.insert(m);
  return D;
}

py::int_ big(const Integer& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Yokonuma-Hecke algebra link invariants";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);

  py::class_<BraidWord>(m, "Braid")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters") = std::vector<int>{})
      .def_static("parse", &parse_braid, py::arg("text"), py::arg("strands"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &BraidWord::letters)
      .def("exponent_sum", &exponent_sum)
      .def("permutation", &braid_permutation)
      .def("components", [](const BraidWord& b) { return closure_components(b).components; })
      .def("linking_matrix", [](const BraidWord& b) { return closure_components(b).linking; })
      .def("conjugate", &markov_conjugate, py::arg("by"))
      .def("stabilize", &markov_stabilize, py::arg("sign") = 1)
      .def("__len__", &BraidWord::length)
      .def("__str__", &BraidWord::str)
      .def("__repr__", [](const BraidWord& b) { return "Braid(" + std::to_string(b.strands()) + ", '" + b.str() + "')"; });

  m.def("homflypt", [](const BraidWord& b) { return render(homflypt(b)); });
  m.def("jones", [](const BraidWord& b) { return render(jones(b)); });

  m.def(
      "theta_cap",
      [](const BraidWord& b, int d, std::optional<std::set<int>> D) {
        return render(theta_cap(b, d, D.value_or(full_set(d))));
      },
      py::arg("braid"), py::arg("d"), py::arg("D") = py::none(), "Theta_d by the Markov trace.");
  m.def(
      "theta_small",
      [](const BraidWord& b, int d, std::optional<std::set<int>> D) {
        return render(theta_small(b, d, D.value_or(full_set(d))));
      },
      py::arg("braid"), py::arg("d"), py::arg("D") = py::none(), "theta_d by the Markov trace.");

  m.def(
      "theta",
      [](const BraidWord& b, std::optional<std::string> E, const std::string& route) {
        const auto e = constant(E);
        if (route == "comb") return render(theta_combinatorial(b, e));
        if (route == "skein") return render(theta_skein(b, e));
        throw std::invalid_argument("route must be comb or skein");
      },
      py::arg("braid"), py::arg("E") = py::none(), py::arg("route") = "comb");
  m.def(
      "theta2",
      [](const BraidWord& b, std::optional<std::string> E, const std::string& route) {
        const auto e = constant(E);
        if (route == "comb") return render(theta2_combinatorial(b, e));
        if (route == "skein") return render(theta2_skein(b, e));
        throw std::invalid_argument("route must be comb or skein");
      },
      py::arg("braid"), py::arg("E") = py::none(), py::arg("route") = "comb");

  m.def(
      "delta", [](const BraidWord& b, int d, const std::set<int>& D) { return render(delta(b, d, D)); },
      py::arg("braid"), py::arg("d"), py::arg("D"));
  m.def(
      "delta_specialized",
      [](const BraidWord& b, int d, const std::set<int>& D) { return render(delta_specialized(b, d, D)); },
      py::arg("braid"), py::arg("d"), py::arg("D"));
  m.def(
      "gamma",
      [](const BraidWord& b, int d, std::vector<int> framing, const std::set<int>& D) {
        if (framing.empty()) framing.assign(b.strands(), 0);
        return render(gamma_framed(FramedBraid(d, std::move(framing), b), D));
      },
      py::arg("braid"), py::arg("d"), py::arg("framing") = std::vector<int>{}, py::arg("D"));

  m.def(
      "dims",
      [](int d, int n) {
        py::dict out;
        out["Y"] = big(dim_y(d, n));
        out["YTL"] = big(dim_ytl(d, n));
        out["CTL"] = big(dim_ctl(d, n));
        out["FTL"] = big(dim_ftl(d, n));
        return out;
      },
      py::arg("d"), py::arg("n"));

  m.def(
      "esolution",
      [](int d, const std::set<int>& D) {
        const ESolution s = esolution(d, D);
        std::vector<std::string> x;
        for (const auto& v : s.x) x.push_back(v.str());
        py::dict out;
        out["x"] = x;
        out["E"] = s.E.str();
        return out;
      },
      py::arg("d"), py::arg("D"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"yokotl"};
        full.insert(full.end(), args.begin(), args.end());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(full, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool; returns (exit code, stdout, stderr).");
}
