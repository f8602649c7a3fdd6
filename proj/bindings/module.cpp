#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hzeta/io.hpp"
#include "hzeta/resonances.hpp"
#include "hzeta/zeta.hpp"

namespace py = pybind11;
using namespace hzeta;

namespace {

SystemKind system_from_name(const std::string& name) {
    if (name == "I") return SystemKind::I;
    if (name == "IJ+") return SystemKind::IJplus;
    if (name == "IJ-") return SystemKind::IJminus;
    if (name == "R") return SystemKind::R;
    if (name == "P") return SystemKind::P;
    throw Error("unknown system '" + name + "'");
}

ZetaWhich which_from_name(const std::string& which) {
    if (which == "Z") return ZetaWhich::Z;
    if (which == "Z+") return ZetaWhich::Zplus;
    if (which == "Z-") return ZetaWhich::Zminus;
    throw Error("which must be 'Z', 'Z+' or 'Z-'");
}

} // namespace

PYBIND11_MODULE(_heckezeta, m) {
    m.doc() = "Selberg zeta functions of infinite-area Hecke triangle surfaces";

    py::register_exception<Error>(m, "HzetaError");

    m.def(
        "zeta",
        [](double lam, Complex s, const std::string& which, int basis) {
            ZetaValue v = zeta_operator(SurfaceParams(lam), s, basis, which_from_name(which));
            return py::make_tuple(v.value, v.error_estimate);
        },
        py::arg("lam"), py::arg("s"), py::arg("which") = "Z", py::arg("basis") = 32,
        "Fredholm-determinant value of Z, Z+ or Z- with an error estimate");

    m.def(
        "zeta_euler",
        [](double lam, Complex s, const std::string& which, int max_word_length, int k_max) {
            ZetaValue v =
                zeta_euler(SurfaceParams(lam), s, which_from_name(which), max_word_length, k_max);
            return py::make_tuple(v.value, v.error_estimate);
        },
        py::arg("lam"), py::arg("s"), py::arg("which") = "Z", py::arg("max_word_length") = 12,
        py::arg("k_max") = 25, "Euler product over the primitive length spectrum");

    m.def(
        "delta",
        [](double lam, int basis, double tol) {
            auto d = find_delta(SurfaceParams(lam), basis, tol);
            return py::make_tuple(d.delta, d.lambda_max_residual, d.z_abs);
        },
        py::arg("lam"), py::arg("basis") = 32, py::arg("tol") = 1e-10,
        "leading real zero of Z: (delta, |lambda_max - 1|, |Z(delta)|)");

    m.def(
        "hurwitz_zeta",
        [](Complex w, Complex q) { return hurwitz_zeta(w, q); },
        py::arg("w"), py::arg("q"));

    m.def(
        "length_spectrum",
        [](double lam, double bound, const std::string& system, int max_word_length) {
            auto sys = build_system(system_from_name(system), SurfaceParams(lam));
            auto lines = length_spectrum(sys, bound, max_word_length);
            py::list out;
            for (const auto& l : lines)
                out.append(py::make_tuple(l.norm_value, l.det_sign, l.multiplicity));
            return out;
        },
        py::arg("lam"), py::arg("bound"), py::arg("system") = "I",
        py::arg("max_word_length") = 12,
        "primitive (norm, det, multiplicity) lines with norm <= bound");

    m.def(
        "periodic_classes",
        [](double lam, const std::string& system, int max_word_length, double bound) {
            auto sys = build_system(system_from_name(system), SurfaceParams(lam));
            auto classes = periodic_classes(sys, max_word_length, bound);
            py::list out;
            for (const auto& c : classes) {
                py::dict d;
                d["word"] = word_label(sys, c.word);
                d["len"] = c.word_length;
                d["trace"] = c.trace;
                d["norm"] = c.norm_value;
                d["det"] = c.det_sign;
                d["primitive"] = c.primitive;
                d["n_mult"] = c.multiplicity_n;
                out.append(d);
            }
            return out;
        },
        py::arg("lam"), py::arg("system"), py::arg("max_word_length"), py::arg("bound"));

    m.def(
        "verify_inclusions",
        [](double lam, int n_max) {
            auto rep = inclusion_report(SurfaceParams(lam), n_max);
            py::list out;
            for (const auto& c : rep.conditions) out.append(py::make_tuple(c.name, c.margin));
            return out;
        },
        py::arg("lam"), py::arg("n_max") = 50, "named disc-inclusion margins");

    m.def(
        "locate_zeros",
        [](double lam, double re_lo, double re_hi, double im_lo, double im_hi, int basis) {
            auto zs = locate_zeros(SurfaceParams(lam), Box{re_lo, re_hi, im_lo, im_hi}, basis);
            py::list out;
            for (const auto& z : zs) out.append(py::make_tuple(z.s, z.residual));
            return out;
        },
        py::arg("lam"), py::arg("re_lo"), py::arg("re_hi"), py::arg("im_lo"), py::arg("im_hi"),
        py::arg("basis") = 24);

    m.def(
        "trace_series",
        [](double lam, Complex s, int basis, int n_max) {
            auto ts = trace_series(SurfaceParams(lam), s, basis, n_max);
            return py::make_tuple(ts.matrix_path.value, ts.orbit_path.value, ts.partition_zn);
        },
        py::arg("lam"), py::arg("s"), py::arg("basis") = 32, py::arg("n_max") = 16);
}
