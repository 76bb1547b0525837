// Python bindings. Results cross the boundary as JSON text and are decoded
// by the package's __init__.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "khcob/io.hpp"
#include "khcob/movie.hpp"
#include "khcob/suites.hpp"
#include "khcob/version.hpp"

namespace py = pybind11;
using namespace khcob;
using nlohmann::json;

namespace {

json diagram_json(const diagram::LinkDiagram& d) {
  return {{"pd", d.to_pd()}, {"crossings", d.crossing_count()}, {"components", d.components()},
          {"n_plus", d.n_plus()}, {"n_minus", d.n_minus()}};
}

chain::FilteredComplex complex_of(const std::string& pd, const std::string& rule) {
  return tqft::cube_complex(diagram::parse_pd(pd), suites::frobenius_rule(rule));
}

}  // namespace

PYBIND11_MODULE(_khcob, m) {
  m.attr("__version__") = KHCOB_VERSION;

  auto base = py::register_exception<diagram::DiagramError>(m, "DiagramError", PyExc_ValueError);
  py::register_exception<movie::MovieError>(m, "MovieError", PyExc_ValueError);
  py::register_exception<movie::FrameMismatch>(m, "FrameMismatch", PyExc_ValueError);
  py::register_exception<tqft::RuleError>(m, "RuleError", PyExc_ValueError);
  py::register_exception<io::FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<tqft::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<suites::IoError>(m, "IoError", PyExc_OSError);
  (void)base;

  m.def("diagram", [](const std::string& pd) { return diagram_json(diagram::parse_pd(pd)).dump(); });
  m.def("jones", [](const std::string& pd) {
    json t = json::object();
    auto poly = diagram::kauffman_bracket_jones(diagram::parse_pd(pd));
    for (auto [e, c] : poly.terms())
      if (c) t[std::to_string(e)] = c;
    return t.dump();
  });
  m.def("homology", [](const std::string& pd, const std::string& rule) {
    return io::to_json(chain::homology(complex_of(pd, rule))).dump();
  });
  m.def("pages", [](const std::string& pd, const std::string& rule, int max_page) {
    return io::to_json(chain::spectral_pages(complex_of(pd, rule), max_page)).dump();
  });
  m.def("complex", [](const std::string& pd, const std::string& rule) {
    return io::to_json(complex_of(pd, rule)).dump();
  });
  m.def("complex_homology", [](const std::string& text) {
    auto c = io::complex_from_json(json::parse(text));
    auto v = chain::verify(c);
    if (!v.ok()) throw io::FormatError("invalid complex: " + v.summary());
    return io::to_json(chain::homology(c)).dump();
  });
  m.def("compare_movies", [](const std::string& a, const std::string& b, const std::string& rule) {
    auto r = suites::frobenius_rule(rule);
    auto ma = movie::parse_movie(a), mb = movie::parse_movie(b);
    py::gil_scoped_release nogil;
    auto h = movie::verify_movie_move(ma, mb, r);
    json out{{"homotopic", h.has_value()}};
    if (h) out["homotopy_nnz"] = h->nnz();
    return out.dump();
  });
  m.def("verify", [](const std::string& suite, const std::string& corpus, int jobs) {
    suites::SuiteOptions o;
    o.jobs = jobs;
    auto c = suites::load_corpus(corpus);
    std::vector<suites::CheckResult> res;
    {
      py::gil_scoped_release nogil;
      res = suites::run_suite(suite, c, o);
    }
    json out = json::array();
    for (auto& r : res)
      out.push_back({{"input", r.input}, {"check", r.check}, {"status", r.status}, {"witness", r.witness}});
    return out.dump();
  });
}
