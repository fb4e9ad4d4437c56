// Python face of the engine: suite runs as lists of dicts, rendered Hopf
// tables, and exact matrix export. Scalars cross the boundary as
// fractions.Fraction (built from strings) so nothing ever gets rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jordeform/fock.hpp"
#include "jordeform/hopf.hpp"
#include "jordeform/suites.hpp"

namespace py = pybind11;
using namespace jordeform;

namespace {

py::object fraction(const Rational& q) {
    static py::object F = py::module_::import("fractions").attr("Fraction");
    return F(py::str(q.str()));
}

py::object big_int(const Int& n) {
    static py::object I = py::module_::import("builtins").attr("int");
    return I(py::str(n.str()));
}

py::list run_checks(int order, int fock_dim, int fb_degree, const std::string& algebra,
                    const std::vector<std::string>& suites) {
    RunConfig cfg;
    cfg.order = order;
    cfg.fock_dim = fock_dim;
    cfg.fb_degree = fb_degree;
    cfg.algebra = algebra;
    cfg.suites = suites;
    Report rep;
    {
        py::gil_scoped_release nogil; // the runner fans out worker threads
        rep = run_suites(cfg);
    }
    py::list out;
    for (const auto& rec : rep) {
        py::dict d;
        d["suite"] = rec.suite;
        d["identity"] = rec.identity;
        d["anchor"] = rec.anchor;
        d["passed"] = rec.pass;
        d["residual_terms"] = rec.residual_terms;
        d["millis"] = rec.millis;
        d["residual"] = rec.residual;
        out.append(d);
    }
    return out;
}

py::list generator_names(const std::string& algebra, int order) {
    const Presentation& p = Presentation::get(algebra_from_name(algebra), order);
    py::list out;
    for (const auto& n : p.names()) out.append(n);
    return out;
}

py::dict commutator_table(const std::string& algebra, int order) {
    const Presentation& p = Presentation::get(algebra_from_name(algebra), order);
    py::dict out;
    for (int i = 1; i < 6; ++i)
        for (int j = 0; j < i; ++j) {
            std::string key = "[" + p.names()[static_cast<size_t>(i)] + "," +
                              p.names()[static_cast<size_t>(j)] + "]";
            out[py::str(key)] = p.element_str(p.bracket(i, j));
        }
    return out;
}

py::dict coproducts(const std::string& algebra, int order) {
    const HopfStructure& h = HopfStructure::get(algebra_from_name(algebra), order);
    py::dict out;
    for (int s = 0; s < 6; ++s)
        out[py::str(h.presentation().names()[static_cast<size_t>(s)])] =
            tensor_str(h.coproduct_gen(s), h.presentation());
    return out;
}

py::dict antipodes(const std::string& algebra, int order) {
    const HopfStructure& h = HopfStructure::get(algebra_from_name(algebra), order);
    py::dict out;
    for (int s = 0; s < 6; ++s)
        out[py::str(h.presentation().names()[static_cast<size_t>(s)])] =
            h.presentation().element_str(h.antipode_gen(s));
    return out;
}

std::string universal_r(const std::string& algebra, int order) {
    const HopfStructure& h = HopfStructure::get(algebra_from_name(algebra), order);
    return tensor_str(build_universal_R(h), h.presentation());
}

// number-state matrix of one generator of the primary deformation; each
// entry lists its z-coefficients from z^0 upward
py::list matrix(const std::string& gen, int order, int dim, const std::string& basis) {
    const Presentation& p = Presentation::get(AlgebraId::h6_jordanian, order);
    int slot = p.slot(gen);
    py::list out;
    if (basis == "unnormalized") {
        FockMatrix m = generator_matrix(slot, order, dim);
        for (const auto& [k, c] : m.entries()) {
            py::dict e;
            e["row"] = k.first;
            e["col"] = k.second;
            py::list z;
            for (int zp = 0; zp <= order; ++zp) z.append(fraction(c[static_cast<size_t>(zp)]));
            e["z"] = z;
            out.append(e);
        }
        return out;
    }
    if (basis != "normalized") throw std::invalid_argument("basis must be normalized or unnormalized");
    RadMatrix m = closed_form_matrix(slot, order, dim);
    for (const auto& [k, v] : m.entries()) {
        py::dict e;
        e["row"] = k.first;
        e["col"] = k.second;
        py::list z;
        for (const auto& r : v) z.append(py::make_tuple(fraction(r.q()), big_int(r.r())));
        e["z"] = z;
        out.append(e);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(jordeform, m) {
    m.doc() = "exact symbolic checks for a family of jordanian quantum deformations";

    m.def("run_checks", &run_checks, py::arg("order") = 4, py::arg("fock_dim") = 16,
          py::arg("fb_degree") = 12, py::arg("algebra") = "all",
          py::arg("suites") = std::vector<std::string>{},
          "run the verification suites and return one dict per checked identity");
    m.def("suite_names", [] { return suite_names(); },
          "canonical suite names, in report order");
    m.def("algebra_names", [] {
        return std::vector<std::string>{"h6_jordanian", "h6_jordanian_dual",
                                        "schrodinger_jordanian"};
    });
    m.def("generator_names", &generator_names, py::arg("algebra"), py::arg("order") = 0);
    m.def("commutator_table", &commutator_table, py::arg("algebra"), py::arg("order") = 4,
          "deformed commutators, rendered exactly");
    m.def("coproducts", &coproducts, py::arg("algebra"), py::arg("order") = 4);
    m.def("antipodes", &antipodes, py::arg("algebra"), py::arg("order") = 4);
    m.def("universal_r", &universal_r, py::arg("algebra"), py::arg("order") = 4);
    m.def("matrix", &matrix, py::arg("gen"), py::arg("order") = 4, py::arg("dim") = 8,
          py::arg("basis") = "normalized",
          "number-state matrix of a primary-side generator; entries are exact");
}
