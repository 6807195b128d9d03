#include "quadcoh/jsonio.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace quadcoh;

namespace {

ParamMap params_from_dict(const py::dict& d) {
    ParamMap out;
    for (const auto& [k, v] : d) {
        std::string key = py::cast<std::string>(k);
        std::string val;
        if (py::isinstance<py::int_>(v))
            val = py::cast<std::string>(py::str(v));
        else if (py::isinstance<py::str>(v))
            val = py::cast<std::string>(v);
        else
            throw ParameterViolation("parameter '" + key + "' must be an int or a rational string");
        Scalar s = parse_scalar(val);
        if (!s.is_real()) throw ParameterViolation("parameter '" + key + "' must be rational");
        out[key] = s.re;
    }
    return out;
}

std::string run_cohomology(const std::string& source, const py::dict& params, int r_max) {
    ParsedStructure ps = resolve_structure(source, params_from_dict(params));
    Json rep = ps.srmi ? cohomology_report_json(ps.name, ps.params, *ps.srmi, r_max)
                       : direct_report_json(ps.name, ps.params, ps.Lambda, r_max);
    return rep.dump(2);
}

std::string run_spectrum(const std::string& source, const py::dict& params, int r) {
    ParsedStructure ps = resolve_structure(source, params_from_dict(params));
    if (!ps.srmi)
        throw ParameterViolation("spectral diagnostics need a frame presentation; '" + ps.name +
                                 "' has no frame realization at these parameters");
    Json rep = Json::object();
    rep["structure"] = ps.name;
    rep["params"] = params_to_json(ps.params);
    rep["reports"] = Json::array({spectrum_record_json(*ps.srmi, r)});
    return rep.dump(2);
}

std::string run_verify(const std::string& suite, unsigned seed) {
    std::vector<SuiteResult> results;
    if (suite.empty())
        results = run_all_suites(seed);
    else
        results.push_back(run_suite(suite, seed));
    Json arr = Json::array();
    for (const SuiteResult& r : results) arr.push_back(suite_result_json(r));
    return arr.dump(2);
}

} // namespace

PYBIND11_MODULE(_quadcoh, m) {
    m.doc() = "exact Koszul-type cohomology of quadratic Poisson tensors; "
              "all functions return JSON strings";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const UnknownIndex& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParameterViolation& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const UnknownSuite& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const IoError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const NotPoisson& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const DegenerateFrame& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const NonCommuting& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
        // remaining MathError subclasses fall through as RuntimeError
    });

    m.def("catalog", []() { return catalog_rows_json().dump(2); },
          "all thirteen catalog entries");
    m.def("entry", [](int index) { return catalog_row_json(index).dump(2); },
          py::arg("index"), "a single catalog entry");
    m.def("cohomology", &run_cohomology, py::arg("structure"),
          py::arg("params") = py::dict(), py::arg("r_max") = 9,
          "cohomology report for dhc:<i> or file:<path>");
    m.def("spectrum", &run_spectrum, py::arg("structure"),
          py::arg("params") = py::dict(), py::arg("r") = 3,
          "joint spectrum and kernel tower at one degree");
    m.def("verify", &run_verify, py::arg("suite") = std::string(),
          py::arg("seed") = 12345u, "run one property suite, or all when empty");
}
