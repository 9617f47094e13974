#include "drg/report.hpp"
#include "drg/spectrum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

// Errors cross the boundary as drgeo.DrgError(kind, message).
PyObject* drg_error = nullptr;

drg::IntersectionArray parse(const std::string& text, bool monotonicity) {
  drg::ArrayOptions opts;
  opts.enforce_monotonicity = monotonicity;
  return drg::parse_array(text, opts);
}

std::string dump(const drg::Report& r) { return r.body.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intersection-array analysis and graph verification (JSON strings).";

  drg_error = PyErr_NewException("drgeo._core.DrgError", PyExc_ValueError, nullptr);
  m.attr("DrgError") = py::handle(drg_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const drg::Error& e) {
      py::tuple args = py::make_tuple(e.kind(), std::string(e.what()));
      PyErr_SetObject(drg_error, args.ptr());
    }
  });

  m.def("normalize", [](const std::string& text) { return drg::format(drg::parse_array(text)); },
        py::arg("array"));

  m.def(
      "analyze",
      [](const std::string& text, bool timing, bool monotonicity) {
        drg::AnalyzeOptions opts;
        opts.timing = timing;
        const auto report = drg::analyze(parse(text, monotonicity), opts);
        return py::make_tuple(report.body.dump(), report.anomaly ? py::cast(*report.anomaly) : py::none());
      },
      py::arg("array"), py::arg("timing") = false, py::arg("monotonicity") = true);

  m.def("ruleout", [](const std::string& text) { return dump(drg::ruleout_report(parse(text, true))); },
        py::arg("array"));
  m.def("ruleout_table7", [] { return dump(drg::ruleout_table7()); });
  m.def("classify", [](const std::string& text) { return dump(drg::classify_report(parse(text, true))); },
        py::arg("array"));
  m.def(
      "families",
      [](long max_k, int max_d, const std::vector<std::string>& labels) {
        return dump(drg::families_report({max_k, max_d}, labels));
      },
      py::arg("max_k"), py::arg("max_d") = 8, py::arg("labels") = std::vector<std::string>{});
  m.def("is_theta_min_minus3", [](const std::string& text) { return drg::is_theta_min_minus3(parse(text, true)); },
        py::arg("array"));

  m.def(
      "build_edgelist",
      [](const std::string& kind, const std::vector<std::string>& args) {
        std::ostringstream out;
        drg::write_edgelist(out, drg::build(kind, args));
        return out.str();
      },
      py::arg("kind"), py::arg("args") = std::vector<std::string>{});
  m.def(
      "halve",
      [](const std::string& edgelist, int side) {
        std::istringstream in(edgelist);
        std::ostringstream out;
        drg::write_edgelist(out, drg::halved_graph(drg::read_edgelist(in), side));
        return out.str();
      },
      py::arg("edgelist"), py::arg("side"));
  m.def(
      "verify",
      [](const std::string& edgelist) {
        std::istringstream in(edgelist);
        const auto g = drg::read_edgelist(in);
        py::gil_scoped_release release;
        return dump(drg::verify_graph(g));
      },
      py::arg("edgelist"));
}
