// Copyright 2026 The kummerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kummerlab/chains.hpp"
#include "kummerlab/cli.hpp"
#include "kummerlab/error.hpp"
#include "kummerlab/expr.hpp"
#include "kummerlab/harness.hpp"
#include "kummerlab/kummer.hpp"

namespace py = pybind11;
using namespace kummerlab;

namespace {

// Python-side handle; the library shares algebras as shared_ptr<const Algebra>.
struct PyAlgebra {
    AlgebraPtr ptr;
};

PyAlgebra make_algebra(std::uint64_t p, std::uint64_t q, std::int64_t alpha, std::int64_t beta,
                       std::optional<std::int64_t> rho) {
    return PyAlgebra{Algebra::create(AlgebraParams{p, q, alpha, beta, rho})};
}

py::dict chain_dict(const Chain& c) {
    py::dict d;
    d["nodes"] = c.nodes;
    d["certs"] = c.certs;
    d["provenance"] = c.provenance;
    return d;
}

}  // namespace

PYBIND11_MODULE(_kummerlab, m) {
    m.doc() = "Symbol algebras of prime degree over prime fields, Kummer elements and weight-1 chains";

    // Messages carry the error kind so Python callers can match on it.
    static PyObject* error = PyErr_NewException("kummerlab.KummerError", PyExc_ValueError, nullptr);
    m.attr("KummerError") = py::handle(error);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const Error& e) {
            const std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
            PyErr_SetString(error, msg.c_str());
        }
    });

    py::class_<PyAlgebra>(m, "Algebra")
        .def(py::init(&make_algebra), py::arg("p") = 5, py::arg("q") = 11, py::arg("alpha") = 2, py::arg("beta") = 3,
             py::arg("rho") = py::none())
        .def_property_readonly("p", [](const PyAlgebra& a) { return a.ptr->degree(); })
        .def_property_readonly("q", [](const PyAlgebra& a) { return a.ptr->field().modulus(); })
        .def_property_readonly("rho", [](const PyAlgebra& a) { return a.ptr->rho().value; })
        .def_property_readonly("alpha", [](const PyAlgebra& a) { return a.ptr->alpha().value; })
        .def_property_readonly("beta", [](const PyAlgebra& a) { return a.ptr->beta().value; })
        .def("generators", [](const PyAlgebra& a) { return generators(a.ptr); })
        .def("parse", [](const PyAlgebra& a, const std::string& src) { return parse_elem(src, a.ptr); })
        .def("from_grid", [](const PyAlgebra& a, const std::vector<std::vector<std::int64_t>>& g) {
            return Elem::from_grid(a.ptr, g);
        })
        .def("__repr__", [](const PyAlgebra& py_alg) {
            const Algebra& a = *py_alg.ptr;
            std::ostringstream s;
            s << "Algebra(p=" << a.degree() << ", q=" << a.field().modulus() << ", alpha=" << a.alpha().value
              << ", beta=" << a.beta().value << ", rho=" << a.rho().value << ")";
            return s.str();
        });

    py::class_<Elem>(m, "Elem")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__mul__", [](const Elem& e, std::int64_t c) { return e.algebra()->field().from_int(c) * e; })
        .def("__rmul__", [](const Elem& e, std::int64_t c) { return e.algebra()->field().from_int(c) * e; })
        .def("__pow__", &Elem::pow)
        .def("grid", &Elem::grid)
        .def("is_zero", &Elem::is_zero)
        .def("is_scalar", &Elem::is_scalar)
        .def("is_kummer", [](const Elem& e) { return is_kummer(e); })
        .def("inverse", [](const Elem& e) { return inverse(e); })
        .def("__str__", &print_elem)
        .def("__repr__", [](const Elem& e) { return "Elem(" + print_elem(e) + ")"; });

    m.def("decompose", [](const Elem& x, const Elem& z) {
        const Decomposition d = decompose(x, z);
        py::dict parts;
        for (auto i : d.label.elements()) parts[py::int_(i)] = d.part(i);
        return parts;
    }, "Nonzero eigencomponents of z relative to x, keyed by exponent");
    m.def("labels", [](const Elem& x, const Elem& z) {
        const EdgeInfo e = edge(x, z);
        return std::pair{e.label_fwd.elements(), e.label_bwd.elements()};
    }, "(l(x, z), l(z, x))");
    m.def("connect", [](const Elem& x, const Elem& z) { return chain_dict(connect(x, z)); });
    m.def("verify_chain", [](const std::vector<Elem>& nodes, const std::vector<std::uint32_t>& certs) {
        return verify_chain(Chain{nodes, certs, std::vector<std::string>(certs.size())});
    });
    m.def("suite_names", [] {
        std::vector<std::string> out;
        for (auto n : suite_names()) out.emplace_back(n);
        return out;
    });
    m.def("run_suite_json",
          [](const std::string& name, std::uint64_t p, std::uint64_t q, std::int64_t alpha, std::int64_t beta,
             std::optional<std::uint64_t> trials, std::uint64_t seed) {
              SuiteReport r;
              {
                  py::gil_scoped_release release;
                  r = run_suite(SuiteSpec{name, AlgebraParams{p, q, alpha, beta, std::nullopt}, trials, seed});
              }
              return to_json(r).dump();
          },
          py::arg("name"), py::arg("p") = 5, py::arg("q") = 11, py::arg("alpha") = 2, py::arg("beta") = 3,
          py::arg("trials") = py::none(), py::arg("seed") = 0);
    m.def("cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "kummerlab");
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Runs the command-line front end in process; returns (exit_code, stdout, stderr)");
    m.attr("__version__") = KUMMERLAB_VERSION;
}
