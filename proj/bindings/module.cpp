// Python bindings. Every operation takes and returns JSON strings with
// the same shapes the CLI emits; the pure-Python wrapper in
// python/swanlab/__init__.py converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "swanlab/errors.hpp"
#include "swanlab/jobs.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/render.hpp"
#include "swanlab/selftest.hpp"

namespace py = pybind11;
using swanlab::OrderedJson;

namespace {

OrderedJson parse_doc(const std::string& src) {
    return OrderedJson::parse(src);
}

std::string conductor_json(const std::string& job) {
    return swanlab::conductor_result(swanlab::job_from_json(parse_doc(job)))
        .dump();
}

std::string conductor_batch_json(const std::string& doc) {
    return swanlab::conductor_batch(parse_doc(doc)).dump();
}

std::string reduce_json(const std::string& job) {
    return swanlab::reduce_result(swanlab::job_from_json(parse_doc(job)))
        .dump();
}

std::string filtration_json(const std::string& job, long n_lo, long n_hi) {
    return swanlab::filtration_result(swanlab::job_from_json(parse_doc(job)),
                                      n_lo, n_hi)
        .dump();
}

std::string normalform_json(const std::string& field, const std::string& basis,
                            long n, const std::string& alpha,
                            const std::string& beta) {
    auto F = swanlab::field_from_json(parse_doc(field));
    auto b = basis == "plain" ? swanlab::Basis::Plain : swanlab::Basis::Log;
    if (basis != "plain" && basis != "log")
        throw swanlab::ConfigError("basis must be \"log\" or \"plain\"");
    return swanlab::normalform_result(F, b, n, alpha, beta).dump();
}

std::string witt_op_json(const std::string& job, const std::string& op,
                         const std::vector<std::string>& other) {
    return swanlab::witt_op_result(swanlab::job_from_json(parse_doc(job)), op,
                                   other)
        .dump();
}

std::string selftest_json(const std::vector<std::string>& suites) {
    return swanlab::selftest_result(suites).dump();
}

// Canonical rendering of one element; ParseError on bad input.
std::string render_element(const std::string& field, const std::string& expr) {
    auto F = swanlab::field_from_json(parse_doc(field));
    return swanlab::render_lau(F, swanlab::parse_element(expr, F));
}

std::string field_echo(const std::string& field) {
    return swanlab::field_to_json(
               swanlab::field_from_json(parse_doc(field)))
        .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Swan conductor computations (C++ core)";
    m.attr("__version__") = SWANLAB_VERSION;
    m.attr("schema") = swanlab::kSchemaTag;

    // translators run newest-first, so the subclass goes second
    py::register_exception<swanlab::Error>(m, "SwanlabError",
                                           PyExc_RuntimeError);
    py::register_exception<swanlab::ParseError>(m, "ParseError",
                                                PyExc_ValueError);

    m.def("conductor_json", &conductor_json, py::arg("job"),
          py::call_guard<py::gil_scoped_release>());
    m.def("conductor_batch_json", &conductor_batch_json, py::arg("doc"),
          py::call_guard<py::gil_scoped_release>());
    m.def("reduce_json", &reduce_json, py::arg("job"),
          py::call_guard<py::gil_scoped_release>());
    m.def("filtration_json", &filtration_json, py::arg("job"),
          py::arg("n_lo"), py::arg("n_hi"),
          py::call_guard<py::gil_scoped_release>());
    m.def("normalform_json", &normalform_json, py::arg("field"),
          py::arg("basis"), py::arg("n"), py::arg("alpha"), py::arg("beta"));
    m.def("witt_op_json", &witt_op_json, py::arg("job"), py::arg("op"),
          py::arg("other") = std::vector<std::string>{});
    m.def("selftest_json", &selftest_json,
          py::arg("suites") = std::vector<std::string>{},
          py::call_guard<py::gil_scoped_release>());
    m.def("selftest_suites", &swanlab::selftest_suite_names);
    m.def("render", &render_element, py::arg("field"), py::arg("expr"));
    m.def("field_echo", &field_echo, py::arg("field"));
}
