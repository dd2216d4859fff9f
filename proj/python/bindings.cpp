// Pybind11 module exposing the main operations. Rationals cross the
// boundary as fractions.Fraction, integers as python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "plurilab/bounds.hpp"
#include "plurilab/infer.hpp"
#include "plurilab/report.hpp"
#include "plurilab/textio.hpp"
#include "plurilab/wps.hpp"

namespace py = pybind11;
using namespace plurilab;

namespace pybind11::detail {

template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<Rat> {
    PYBIND11_TYPE_CASTER(Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = Rat(Int(py::str(src).cast<std::string>()));
            return true;
        }
        if (py::isinstance<py::str>(src)) {
            value = parse_rational(src.cast<std::string>());
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            Int num(py::str(src.attr("numerator")).cast<std::string>());
            Int den(py::str(src.attr("denominator")).cast<std::string>());
            if (den == 0) return false;
            value = Rat(num, den);
            value.canonicalize();
            return true;
        }
        return false;
    }

    static handle cast(const Rat& v, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(to_string(v)).release();
    }
};

}  // namespace pybind11::detail

namespace {

reid::Basket basket_from_object(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return textio::parse_basket(obj.cast<std::string>());
    if (py::isinstance<reid::Basket>(obj)) return obj.cast<reid::Basket>();
    reid::Basket b;
    for (auto item : obj) {
        auto tup = item.cast<py::tuple>();
        long mult = tup.size() > 2 ? tup[2].cast<long>() : 1;
        b.add(tup[0].cast<long>(), tup[1].cast<long>(), mult);
    }
    return b;
}

wps::WeightedHypersurface surface_from_object(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return textio::parse_hypersurface(obj.cast<std::string>());
    auto tup = obj.cast<py::tuple>();
    wps::WeightedHypersurface x;
    auto ws = tup[0].cast<std::vector<long>>();
    if (ws.size() != 5) throw std::invalid_argument("expected 5 weights");
    std::copy(ws.begin(), ws.end(), x.weights.begin());
    x.degree = tup[1].cast<long>();
    wps::validate(x);
    return x;
}

}  // namespace

PYBIND11_MODULE(_plurilab, m) {
    m.doc() = "exact plurigenus and pluricanonical-bound computations";
    m.attr("__version__") = verify::kVersion;

    py::class_<reid::Basket>(m, "Basket")
        .def(py::init([](const py::object& obj) { return basket_from_object(obj); }))
        .def("entries",
             [](const reid::Basket& b) {
                 py::list out;
                 for (const auto& e : b.entries()) out.append(py::make_tuple(e.b, e.r, e.mult));
                 return out;
             })
        .def("size", &reid::Basket::size)
        .def("normalized", &reid::Basket::normalized)
        .def("__str__", [](const reid::Basket& b) { return textio::format_basket(b); })
        .def("__repr__",
             [](const reid::Basket& b) { return "Basket('" + textio::format_basket(b) + "')"; })
        .def("__eq__", [](const reid::Basket& a, const reid::Basket& b) { return a == b; });

    m.def(
        "correction",
        [](long b, long r, long m_) { return reid::correction({b, r}, m_); },
        py::arg("b"), py::arg("r"), py::arg("m"));
    m.def(
        "reid_plurigenus",
        [](const Int& chi, const Rat& k3, const py::object& basket, long m_) {
            return reid::plurigenus({chi, k3, basket_from_object(basket)}, m_);
        },
        py::arg("chi"), py::arg("k3"), py::arg("basket"), py::arg("m"));
    m.def("enumerate_quotient_types", [](long r_max) {
        py::list out;
        for (const auto& q : reid::enumerate_quotient_types(r_max))
            out.append(py::make_tuple(q.b, q.r));
        return out;
    });
    m.def("check_monotonicity", [](long r_max) {
        py::list out;
        for (const auto& v : reid::check_monotonicity(r_max))
            out.append(py::make_tuple(v.b, v.r, v.m));
        return out;
    });

    m.def("well_formed",
          [](const py::object& s) { return wps::well_formed(surface_from_object(s)); });
    m.def("hilbert_coefficient", [](const py::object& s, long n) {
        return wps::hilbert_coefficient(surface_from_object(s), n);
    });
    m.def("plurigenus_wps",
          [](const py::object& s, long m_) { return wps::plurigenus(surface_from_object(s), m_); });
    m.def("k3_wps", [](const py::object& s) { return wps::k3(surface_from_object(s)); });
    m.def("chi_structure_sheaf", &wps::chi_structure_sheaf, py::arg("pg"), py::arg("q") = Int(0),
          py::arg("h2") = Int(0));
    m.def("chi_canonical_sheaf", &wps::chi_canonical_sheaf, py::arg("pg"), py::arg("q") = Int(0),
          py::arg("h2") = Int(0));

    m.def(
        "infer_basket",
        [](const std::map<long, Int>& pluri, const py::object& chi, const py::object& k3,
           long r_max, long size_max) {
            infer::InferenceProblem prob;
            prob.pluri = pluri;
            if (!chi.is_none()) prob.chi = chi.cast<Int>();
            if (!k3.is_none()) prob.k3 = k3.cast<Rat>();
            prob.r_max = r_max;
            prob.size_max = size_max;
            auto res = infer::infer_basket(prob);
            py::dict out;
            out["basket"] = res.basket;
            out["chi"] = res.chi;
            out["k3"] = res.k3;
            out["exact_match"] = res.exact_match;
            return out;
        },
        py::arg("pluri"), py::arg("chi") = py::none(), py::arg("k3") = py::none(),
        py::arg("r_max") = 30, py::arg("size_max") = 12);
    m.def("solve_k3", [](const Int& p2, const Int& chi, const py::object& basket) {
        return infer::solve_k3(p2, chi, basket_from_object(basket));
    });
    m.def("solve_chi", [](const Int& p2, const Rat& k3, const py::object& basket) {
        return infer::solve_chi(p2, k3, basket_from_object(basket));
    });

    py::class_<bounds::Scenario>(m, "Scenario")
        .def(py::init([](const std::string& text) { return textio::parse_scenario(text); }))
        .def_readonly("m0", &bounds::Scenario::m0)
        .def_readonly("p", &bounds::Scenario::p)
        .def_readonly("beta", &bounds::Scenario::beta)
        .def_readonly("g_min", &bounds::Scenario::g_min)
        .def_readonly("sep_m_min", &bounds::Scenario::sep_m_min)
        .def_readonly("even_curve", &bounds::Scenario::even_curve)
        .def_readonly("nonhyperelliptic", &bounds::Scenario::nonhyperelliptic)
        .def_readonly("label", &bounds::Scenario::label)
        .def("__str__", [](const bounds::Scenario& sc) { return textio::format_scenario(sc); });

    py::class_<bounds::Step>(m, "Step")
        .def_readonly("m", &bounds::Step::m)
        .def_readonly("alpha", &bounds::Step::alpha)
        .def_readonly("alpha0", &bounds::Step::alpha0)
        .def_readonly("xi_before", &bounds::Step::xi_before)
        .def_readonly("xi_after", &bounds::Step::xi_after)
        .def_readonly("birational", &bounds::Step::criterion_fired);

    py::class_<bounds::BoundResult>(m, "BoundResult")
        .def_readonly("xi_final", &bounds::BoundResult::xi_final)
        .def_property_readonly("m_birational",
                               [](const bounds::BoundResult& r) -> py::object {
                                   if (r.m_birational) return py::int_(*r.m_birational);
                                   return py::none();
                               })
        .def_readonly("trace", &bounds::BoundResult::trace)
        .def_readonly("scenario", &bounds::BoundResult::scenario_label);

    m.def("preset", [](const std::string& name, long m0) {
        return bounds::preset(bounds::preset_id_from_string(name), m0);
    });
    m.def("alpha_of", &bounds::alpha_of);
    m.def("xi_seed_asymptotic", &bounds::xi_seed_asymptotic);
    m.def("refine_xi", &bounds::refine_xi);
    m.def("run_schedule", &bounds::run_schedule);
    m.def(
        "min_birational_m",
        [](const bounds::Scenario& sc, const py::object& m_hi) {
            std::optional<long> cap;
            if (!m_hi.is_none()) cap = m_hi.cast<long>();
            return bounds::min_birational_m(sc, cap);
        },
        py::arg("scenario"), py::arg("m_hi") = py::none());
    m.def("beta_sequence", [](long m0, long p, long t0, long n) {
        auto seq = bounds::beta_sequence(m0, p, t0, n);
        return py::make_tuple(seq.terms, seq.limit());
    });
    m.def("prop_b_check", &bounds::prop_b_check);
    m.def("theorem_44", &bounds::theorem_44, py::arg("m0"), py::arg("chi_zero") = false);
    m.def("corollary_threshold", &bounds::corollary_threshold);
    m.def("main_theorem_threshold", &bounds::main_theorem_threshold);

    m.def(
        "verify_paper",
        [](const std::string& filter) {
            auto rep = verify::verify_paper(filter);
            py::object loads = py::module_::import("json").attr("loads");
            return loads(verify::to_json(rep));
        },
        py::arg("filter") = "");

    m.def("parse_basket", &textio::parse_basket);
    m.def("format_basket", &textio::format_basket);

    py::register_exception<infer::not_found_error>(m, "NotFoundError");
    py::register_exception<infer::ambiguity_error>(m, "AmbiguityError");
}
