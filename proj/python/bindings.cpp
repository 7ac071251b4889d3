// Copyright 2026 The geomur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Matrices cross the boundary as complex128 numpy arrays.

#include <complex>
#include <string>

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geomur/domains.hpp"
#include "geomur/error.hpp"
#include "geomur/fidelity.hpp"
#include "geomur/metrics.hpp"
#include "geomur/serialization.hpp"
#include "geomur/states.hpp"
#include "geomur/sweep.hpp"
#include "geomur/uncertainty.hpp"

namespace py = pybind11;
using namespace geomur;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1))
        throw Error(ErrorCode::DimensionMismatch, "expected a square 2-D array");
    const auto n = static_cast<std::size_t>(a.shape(0));
    return ComplexMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

ComplexVector to_vector(const CArray &a) {
    if (a.ndim() != 1)
        throw Error(ErrorCode::DimensionMismatch, "expected a 1-D array");
    return ComplexVector(a.data(), a.data() + a.shape(0));
}

CArray from_matrix(const ComplexMatrix &m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    CArray out({n, n});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

CArray from_vector(const ComplexVector &v) {
    CArray out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

MetricKind kind_from(const std::string &name) {
    const auto k = parse_metric_kind(name);
    if (!k)
        throw Error(ErrorCode::ParseError, "unknown metric '" + name + "'");
    return *k;
}

py::object json_to_py(const nlohmann::json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_geomur, m) {
    m.doc() = "Fidelity-based metrics and uncertainty relations";

    static py::exception<Error> geomur_error(m, "GeomurError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error &e) {
            PyErr_SetString(geomur_error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const CArray &a) { return DensityMatrix(to_matrix(a)); }), py::arg("matrix"))
        .def_static("from_pure", &DensityMatrix::from_pure)
        .def_static("maximally_mixed", &DensityMatrix::maximally_mixed)
        .def_property_readonly("dim", &DensityMatrix::dim)
        .def_property_readonly("matrix", [](const DensityMatrix &r) { return from_matrix(r.matrix()); })
        .def("rank", [](const DensityMatrix &r) { return r.rank(); });

    py::class_<PureState>(m, "PureState")
        .def(py::init([](const CArray &a) { return PureState(to_vector(a)); }), py::arg("amplitudes"))
        .def_static("normalized", [](const CArray &a) { return PureState::normalized(to_vector(a)); })
        .def_static("basis", &PureState::basis)
        .def_property_readonly("dim", &PureState::dim)
        .def_property_readonly("amplitudes", [](const PureState &p) { return from_vector(p.amplitudes()); });

    py::class_<ProjectiveObservable>(m, "ProjectiveObservable")
        .def(py::init([](const CArray &a) { return ProjectiveObservable(to_matrix(a)); }),
             py::arg("eigenbasis"))
        .def_static("computational", &ProjectiveObservable::computational)
        .def_static("fourier", &ProjectiveObservable::fourier)
        .def_property_readonly("dim", &ProjectiveObservable::dim)
        .def_property_readonly("eigenbasis",
                               [](const ProjectiveObservable &o) { return from_matrix(o.eigenbasis()); });

    py::class_<URReport>(m, "URReport")
        .def_readonly("p_max_a", &URReport::p_max_a)
        .def_readonly("p_max_b", &URReport::p_max_b)
        .def_readonly("u_a", &URReport::u_a)
        .def_readonly("u_b", &URReport::u_b)
        .def_readonly("overlap_c", &URReport::overlap_c)
        .def_readonly("bound", &URReport::bound)
        .def_readonly("slack", &URReport::slack)
        .def("violates", &URReport::violates, py::arg("tolerance") = 1e-9)
        .def("to_dict", [](const URReport &r) { return json_to_py(to_json(r)); });

    m.def("fidelity", [](const DensityMatrix &a, const DensityMatrix &b) { return fidelity(a, b); });
    m.def("fidelity_oracle",
          [](const DensityMatrix &a, const DensityMatrix &b) { return fidelity_oracle(a, b); });
    m.def("fidelity_pure_pure", &fidelity_pure_pure);
    m.def("purification_overlap_search",
          [](const DensityMatrix &a, const DensityMatrix &b, std::size_t trials, std::uint64_t seed) {
              return purification_overlap_search(a, b, trials, seed);
          },
          py::arg("rho"), py::arg("sigma"), py::arg("trials"), py::arg("seed"));
    m.def("purify", [](const DensityMatrix &r) { return purify(r); });
    m.def("partial_trace_aux", &partial_trace_aux, py::arg("psi"), py::arg("sys_dim"), py::arg("aux_dim"));

    m.def("metric_kinds", [] {
        std::vector<std::string> names;
        for (MetricKind k : kAllMetricKinds)
            names.emplace_back(to_string(k));
        return names;
    });
    m.def("f_of", [](const std::string &k, double x) { return f_of(kind_from(k), x); },
          py::arg("metric"), py::arg("x"));
    m.def("metric_distance",
          [](const std::string &k, const DensityMatrix &a, const DensityMatrix &b) {
              return metric_distance(kind_from(k), a, b);
          },
          py::arg("metric"), py::arg("rho"), py::arg("sigma"));

    m.def("outcome_probabilities",
          [](const ProjectiveObservable &o, const DensityMatrix &r) { return outcome_probabilities(o, r); });
    m.def("max_probability", [](const ProjectiveObservable &o, const DensityMatrix &r) {
        const auto mp = max_probability(o, r);
        return py::make_tuple(mp.value, mp.index);
    });
    m.def("overlap", &overlap);
    m.def("check_ur",
          [](const std::string &k, const ProjectiveObservable &a, const ProjectiveObservable &b,
             const DensityMatrix &r) { return check_ur(kind_from(k), a, b, r); },
          py::arg("metric"), py::arg("a"), py::arg("b"), py::arg("rho"));

    m.def("h_boundary", [](const std::string &k, double c, double p) { return h_boundary(kind_from(k), c, p); },
          py::arg("metric"), py::arg("c"), py::arg("p"));
    m.def("g_boundary",
          [](const std::string &k, double c, double p, std::size_t dim) {
              return g_boundary(kind_from(k), c, p, dim);
          },
          py::arg("metric"), py::arg("c"), py::arg("p"), py::arg("dim"));
    m.def("boundary_from_quadratic",
          [](const std::string &k, double c, double p) { return boundary_from_quadratic(kind_from(k), c, p); },
          py::arg("metric"), py::arg("c"), py::arg("p"));
    m.def("in_domain",
          [](const std::string &k, double c, std::size_t dim, double pa, double pb) {
              return in_domain(kind_from(k), c, dim, pa, pb);
          },
          py::arg("metric"), py::arg("c"), py::arg("dim"), py::arg("p_a"), py::arg("p_b"));
    m.def("region_samples",
          [](const std::string &k, double c, std::size_t dim, std::size_t points) {
              std::vector<std::pair<double, double>> out;
              for (const auto &pt : region_samples({kind_from(k), c, dim}, points))
                  out.emplace_back(pt.p, pt.g);
              return out;
          },
          py::arg("metric"), py::arg("c"), py::arg("dim"), py::arg("points") = 1001);

    m.def("sample_haar_unitary",
          [](std::size_t dim, std::uint64_t seed) { return from_matrix(sample_haar_unitary(dim, seed)); });
    m.def("sample_pure", &sample_pure, py::arg("dim"), py::arg("seed"));
    m.def("sample_mixed", &sample_mixed, py::arg("dim"), py::arg("aux_dim"), py::arg("seed"));
    m.def("sample_observable", &sample_observable, py::arg("dim"), py::arg("seed"));

    m.def("run_sweep",
          [](const py::dict &config, unsigned workers) {
              const SweepConfig c = sweep_config_from_json(
                  nlohmann::json::parse(py::str(py::module_::import("json").attr("dumps")(config))
                                            .cast<std::string>()));
              SweepResult r;
              {
                  py::gil_scoped_release release;
                  r = run_sweep(c, workers);
              }
              return json_to_py(to_json(r, c));
          },
          py::arg("config"), py::arg("workers") = 1);
}
