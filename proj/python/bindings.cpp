#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affvcs/report.hpp"

namespace py = pybind11;
using namespace affvcs;

namespace {

RunConfig config(int lambda, const std::string& c, int degree, const std::string& d0, unsigned jobs,
                 std::size_t cap) {
    RunConfig cfg;
    cfg.lambda = lambda;
    cfg.c = parse_scalar(c);
    cfg.degree = degree;
    cfg.d0 = parse_scalar(d0);
    cfg.jobs = jobs;
    cfg.cap = cap;
    cfg.validate();
    return cfg;
}

std::string character_json(int lambda, const std::string& c, int degree, unsigned jobs, std::size_t cap) {
    RunConfig cfg = config(lambda, c, degree, "0", jobs, cap);
    VermaModule m(cfg.lambda, cfg.c);
    py::gil_scoped_release release;
    return to_json(CharacterReport{cfg.lambda, cfg.c, degree, m.character_table(degree, jobs, cap)}).dump();
}

std::string verify_json(int lambda, const std::string& c, int degree, const std::string& d0, unsigned jobs) {
    RunConfig cfg = config(lambda, c, degree, d0, jobs, 2000);
    py::gil_scoped_release release;
    return to_json(cfg, run_verify(cfg)).dump();
}

std::string singular_json(int lambda, const std::string& c, int degree) {
    RunConfig cfg = config(lambda, c, degree, "0", 1, 2000);
    VermaModule m(cfg.lambda, cfg.c);
    py::gil_scoped_release release;
    return to_json(singular_report(m, degree, 1, cfg.cap)).dump();
}

std::vector<std::string> coherent_map(int lambda, const std::string& c, const std::string& word, int j) {
    VermaModule m(lambda, parse_scalar(c));
    if (j < 0 || j > lambda) throw py::index_error("j must lie in [0, lambda]");
    VcsVector image = coherent_state_map(m, WVector(BasisKey{parse_word(word), j}));
    std::vector<std::string> out;
    for (const auto& p : image.components()) out.push_back(to_string(p));
    return out;
}

std::vector<std::string> realize_terms(const std::string& generator, int lambda, const std::string& c,
                                       const std::string& d0, int degree) {
    Realizer r(lambda, parse_scalar(c), parse_scalar(d0));
    std::vector<std::string> out;
    for (const auto& t : r.realize(parse_generator(generator)).terms(degree)) out.push_back(to_string(t));
    return out;
}

}  // namespace

PYBIND11_MODULE(_affvcs, m) {
    m.doc() = "Exact vector coherent state realization of affine sl(2) highest weight modules";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::length_error& e) {
            PyErr_SetString(PyExc_MemoryError, e.what());
        }
    });

    m.def("character_json", &character_json, py::arg("lambda_"), py::arg("c"), py::arg("degree"),
          py::arg("jobs") = 1, py::arg("cap") = 2000);
    m.def("verify_json", &verify_json, py::arg("lambda_"), py::arg("c"), py::arg("degree"), py::arg("d0") = "0",
          py::arg("jobs") = 1);
    m.def("singular_json", &singular_json, py::arg("lambda_"), py::arg("c"), py::arg("degree"));
    m.def("coherent_map", &coherent_map, py::arg("lambda_"), py::arg("c"), py::arg("word"), py::arg("j") = 0);
    m.def("realize_terms", &realize_terms, py::arg("generator"), py::arg("lambda_") = 0, py::arg("c") = "1",
          py::arg("d0") = "0", py::arg("degree") = 3);
    m.def("z_poly", [](int n, const std::string& scale) { return to_string(z_poly(n, parse_scalar(scale))); },
          py::arg("n"), py::arg("scale") = "1");
}
