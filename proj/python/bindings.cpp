#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gg/bijections.hpp"
#include "gg/identities.hpp"
#include "gg/marking.hpp"

namespace py = pybind11;
using namespace gg;

namespace {

IdentityParams params(int k, int i, int j) { return {k, i, j}; }

// BigInt goes through its decimal form
py::int_ to_py(const BigInt& v) {
    std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict marking(const GGMarking& m) {
    py::dict d;
    d["parts"] = m.values;
    d["marks"] = m.marks;
    d["rows"] = m.rows;
    if (m.overlined) d["overlined"] = *m.overlined;
    else d["overlined"] = py::none();
    return d;
}

py::tuple check(const Check& c) { return py::make_tuple(c.ok, c.detail); }

}  // namespace

PYBIND11_MODULE(_ggcomp, m) {
    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);

    m.def("mark", [](std::vector<int> parts, std::optional<int> overline) {
        Partition p(std::move(parts));
        return marking(overline ? gg_mark_special(SpecialPartition::with_overline(p, *overline)) : gg_mark(p));
    }, py::arg("parts"), py::arg("overline") = py::none());

    m.def("in_class", [](std::vector<int> parts, int k, int i, int j) {
        return satisfies_C(Partition(std::move(parts)), params(k, i, j));
    }, py::arg("parts"), py::arg("k"), py::arg("i"), py::arg("j"));

    m.def("enumerate_class", [](int k, int i, int j, int n) {
        std::vector<std::vector<int>> out;
        for_each_C(params(k, i, j), n, [&](const Partition& p) { out.push_back(p.parts()); });
        return out;
    }, py::arg("k"), py::arg("i"), py::arg("j"), py::arg("n"));

    m.def("count_D", [](int k, int i, int j, int n) { return to_py(count_D(params(k, i, j), n)); },
          py::arg("k"), py::arg("i"), py::arg("j"), py::arg("n"));

    m.def("product_coeffs", [](int k, int i, int j, long q) {
        LaurentSeries s = rhs_product(params(k, i, j), q);
        py::list out;
        for (long e = 0; e <= q; ++e) out.append(to_py(s.coeff(e)));
        return out;
    }, py::arg("k"), py::arg("i"), py::arg("j"), py::arg("q"));

    m.def("phi", [](std::vector<int> lambda, std::vector<int> tau, std::vector<int> eta, int k, int i, int j) {
        std::sort(tau.rbegin(), tau.rend());
        std::sort(eta.rbegin(), eta.rend());
        return phi(Triplet{Partition(std::move(lambda)), tau, eta}, params(k, i, j)).parts();
    }, py::arg("lam"), py::arg("tau"), py::arg("eta"), py::arg("k"), py::arg("i"), py::arg("j"));

    m.def("psi", [](std::vector<int> parts, int k, int i, int j) {
        Triplet t = psi(Partition(std::move(parts)), params(k, i, j));
        return py::make_tuple(t.lambda.parts(), t.tau, t.eta);
    }, py::arg("parts"), py::arg("k"), py::arg("i"), py::arg("j"));

    m.def("reduce", [](std::vector<int> parts, int p, int k, int i, int j) {
        return reduce(Partition(std::move(parts)), p, params(k, i, j)).parts();
    }, py::arg("parts"), py::arg("p"), py::arg("k"), py::arg("i"), py::arg("j"));

    m.def("dilate", [](std::vector<int> parts, int p, int k, int i, int j) {
        return dilate(Partition(std::move(parts)), p, params(k, i, j)).parts();
    }, py::arg("parts"), py::arg("p"), py::arg("k"), py::arg("i"), py::arg("j"));

    m.def("verify_gg", [](int which, long q) { return check(verify_gg(which, q)); });
    m.def("verify_companion", [](int k, int i, int j, long q) { return check(verify_companion(params(k, i, j), q)); });
    m.def("verify_bressoud", [](int k, int i, int j, long q) { return check(verify_bressoud(params(k, i, j), q)); });
}
