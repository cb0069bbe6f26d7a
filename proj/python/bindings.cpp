#include "bpf/cli.hpp"
#include "bpf/identities.hpp"
#include "bpf/serialize.hpp"
#include "bpf/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace bpf;

namespace {

using ParamTuple = std::tuple<std::string, std::string, std::string, std::string>;

Params to_params(const ParamTuple& t) {
    return Params(Rational::parse(std::get<0>(t)), Rational::parse(std::get<1>(t)),
                  Rational::parse(std::get<2>(t)), Rational::parse(std::get<3>(t)));
}

template <std::size_t N>
std::vector<std::string> strings(const Hypercomplex<Rational, N>& u) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < N; ++i) {
        out.push_back(u[i].to_string());
    }
    return out;
}

template <std::size_t N>
Hypercomplex<Rational, N> from_strings(const std::vector<std::string>& values) {
    if (values.size() != N) {
        throw std::invalid_argument("expected " + std::to_string(N) + " components");
    }
    auto out = Hypercomplex<Rational, N>::zero(Rational(0));
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = Rational::parse(values[i]);
    }
    return out;
}

std::string report_json(const IdentityReport& r) { return dump_canonical(to_json(r)); }

std::vector<std::string> identity(const std::string& name, const ParamTuple& t, long n, long r) {
    IdentityChecker c(to_params(t));
    if (name == "catalan_quat") return {report_json(c.catalan_quat(n, r))};
    if (name == "catalan_oct") return {report_json(c.catalan_oct(n, r))};
    if (name == "cassini_quat") return {report_json(c.cassini_quat(n))};
    if (name == "matrix_rep") return {report_json(c.matrix_rep(n))};
    if (name == "cassini_even") return {report_json(c.cassini_even(n))};
    if (name == "mixed_relation_quat") return {report_json(c.mixed_relation_quat(n))};
    if (name == "mixed_relation_oct") return {report_json(c.mixed_relation_oct(n))};
    if (name == "norm_formula") return {report_json(c.norm_formula(n))};
    if (name == "sums_quat" || name == "sums_oct") {
        const auto reports = name == "sums_quat" ? c.sums_quat(n) : c.sums_oct(n);
        std::vector<std::string> out;
        for (const auto& rep : reports) {
            out.push_back(report_json(rep));
        }
        return out;
    }
    throw std::invalid_argument("unknown identity \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact generalized bi-periodic Fibonacci quaternions and octonions";

    m.def(
        "sequence",
        [](const ParamTuple& t, long start, long stop) {
            SequenceEngine e(to_params(t));
            std::vector<std::string> out;
            for (long n = start; n < stop; ++n) {
                out.push_back(e.value(n).to_string());
            }
            return out;
        },
        py::arg("params"), py::arg("start"), py::arg("stop"), "w_n for start <= n < stop as strings");
    m.def(
        "quaternion",
        [](const ParamTuple& t, long n) {
            SequenceEngine e(to_params(t));
            return strings(W(n, e));
        },
        py::arg("params"), py::arg("n"));
    m.def(
        "octonion",
        [](const ParamTuple& t, long n) {
            SequenceEngine e(to_params(t));
            return strings(OW(n, e));
        },
        py::arg("params"), py::arg("n"));
    m.def(
        "binet", [](const ParamTuple& t, long n) { return w_binet(n, to_params(t)).to_string(); },
        py::arg("params"), py::arg("n"));
    m.def(
        "quaternion_binet", [](const ParamTuple& t, long n) { return strings(W_binet(n, to_params(t))); },
        py::arg("params"), py::arg("n"));
    m.def(
        "octonion_binet", [](const ParamTuple& t, long n) { return strings(OW_binet(n, to_params(t))); },
        py::arg("params"), py::arg("n"));
    m.def(
        "genfunc",
        [](const ParamTuple& t, std::size_t order, bool octonion) {
            std::vector<std::vector<std::string>> out;
            if (octonion) {
                for (const auto& c : genfunc_oct(to_params(t), order)) {
                    out.push_back(strings(c));
                }
            } else {
                for (const auto& c : genfunc_quat(to_params(t), order)) {
                    out.push_back(strings(c));
                }
            }
            return out;
        },
        py::arg("params"), py::arg("order"), py::arg("octonion") = false);
    m.def(
        "multiply",
        [](const std::vector<std::string>& u, const std::vector<std::string>& v) {
            if (u.size() == 4) {
                return strings(from_strings<4>(u) * from_strings<4>(v));
            }
            return strings(from_strings<8>(u) * from_strings<8>(v));
        },
        py::arg("u"), py::arg("v"), "hypercomplex product of two 4- or 8-component elements");
    m.def(
        "norm",
        [](const std::vector<std::string>& u) {
            if (u.size() == 4) {
                return hc_norm(from_strings<4>(u)).to_string();
            }
            return hc_norm(from_strings<8>(u)).to_string();
        },
        py::arg("u"));
    m.def("identity", &identity, py::arg("name"), py::arg("params"), py::arg("n"), py::arg("r") = 0,
          "identity reports as canonical JSON strings");
    m.def(
        "verify",
        [](const ParamTuple& t, long n_max) {
            std::vector<std::string> out;
            for (const auto& rep : cli::verify_point(to_params(t), n_max, {})) {
                out.push_back(report_json(rep));
            }
            return out;
        },
        py::arg("params"), py::arg("n_max"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "bpf");
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
