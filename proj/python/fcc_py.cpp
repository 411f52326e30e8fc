#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fcc/api.hpp"
#include "fcc/json_io.hpp"
#include "fcc/reference_cases.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_fcc, m) {
    m.doc() = "Exact toolkit for regular F-manifolds with compatible connection";

    py::register_exception<fcc::SpecError>(m, "SpecError", PyExc_ValueError);

    m.def("gen_a0", &fcc::gen_a0_json, py::arg("spec_json"),
          "Build the general solution a0 from a spec-file JSON string; returns "
          "a JSON string {\"a0\": \"<canonical form>\"}.");

    m.def(
        "check",
        [](const std::string& spec_json, bool master, bool connection, bool curvature,
           bool dual, bool metric, int hierarchy) {
            fcc::CheckRequest req{master, connection, curvature, dual, metric, hierarchy};
            fcc::CheckOutcome out = fcc::run_check(spec_json, req);
            return py::make_tuple(out.pass, out.report);
        },
        py::arg("spec_json"), py::arg("master") = false, py::arg("connection") = false,
        py::arg("curvature") = false, py::arg("dual") = false, py::arg("metric") = false,
        py::arg("hierarchy") = -1,
        "Run the requested verification suites; returns (pass, report_json).");

    m.def(
        "verify_paper",
        [](const std::vector<std::string>& cases) {
            fcc::CheckOutcome out = fcc::run_verify(cases);
            return py::make_tuple(out.pass, out.report);
        },
        py::arg("cases") = std::vector<std::string>{},
        "Reproduce the published reference tables; returns (pass, report_json).");

    m.def("reference_case_ids", [] { return fcc::reference_case_ids(); },
          "Ids of the published reference cases.");
}
