#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "displab/companion.hpp"
#include "displab/error.hpp"
#include "displab/extremal.hpp"
#include "displab/families.hpp"
#include "displab/laguerre.hpp"
#include "displab/nonstrict.hpp"
#include "displab/ode.hpp"
#include "displab/orthogonality.hpp"
#include "displab/serialize.hpp"
#include "displab/strict_count.hpp"

namespace py = pybind11;
using namespace displab;

namespace {

py::object to_py(const BigInt& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object to_py(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list to_py(const Polynomial& p) {
    py::list l;
    for (const auto& c : p.coeffs()) l.append(to_py(c));
    return l;
}

Polynomial poly_from_py(const py::iterable& coeffs) {
    std::vector<Rational> c;
    for (auto h : coeffs) c.push_back(from_py(h));
    return Polynomial(std::move(c));
}

py::tuple to_py(const Ode2& e) { return py::make_tuple(to_py(e.U()), to_py(e.V()), to_py(e.W())); }

Ode2 ode_from_py(const py::tuple& t) {
    if (t.size() != 3) throw DomainError("an equation is a (U, V, W) triple");
    return {poly_from_py(t[0]), poly_from_py(t[1]), poly_from_py(t[2])};
}

struct Family {
    FamilySpec spec;
    SimpleDigraph graph;
};

Family family(const std::string& text) {
    auto spec = parse_family(text);
    return {spec, make_family(spec)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact disposition counting and companion polynomials";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_OverflowError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<SimpleDigraph>(m, "Digraph")
        .def(py::init([](int n, std::vector<std::pair<int, int>> arcs) {
                 Multidigraph g(n);
                 for (auto [u, v] : arcs) g.add_arc(u, v);
                 return normalize(g);
             }),
             py::arg("n"), py::arg("arcs") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("order", &SimpleDigraph::order)
        .def_property_readonly("arcs", &SimpleDigraph::arcs)
        .def_property_readonly("had_loop", &SimpleDigraph::had_loop)
        .def("__eq__", [](const SimpleDigraph& a, const SimpleDigraph& b) { return a == b; })
        .def("__repr__", [](const SimpleDigraph& d) {
            return "Digraph(" + std::to_string(d.order()) + ", " + std::to_string(d.arc_count()) + " arcs)";
        });

    m.def("family", [](const std::string& text) { return family(text).graph; }, py::arg("spec"),
          "Digraph of a family string such as 'staircase:6' or 'tworow:2,3'");
    m.def("resolve_vertex", [](const std::string& text, const std::string& label) {
        return resolve_vertex(parse_family(text), label);
    });
    m.def("parse_digraph", [](const std::string& text) {
        auto first = text.find_first_not_of(" \t\r\n");
        bool is_json = first != std::string::npos && text[first] == '{';
        return normalize(is_json ? parse_digraph_json(text) : parse_digraph_text(text));
    });
    m.def("condense", &condense);
    m.def("reverse", &reverse);

    m.def("count", [](const SimpleDigraph& d) { return to_py(count(d)); });
    m.def("count_bruteforce", [](const SimpleDigraph& d) { return to_py(count_bruteforce(d)); });
    m.def("enumerate_dispositions", [](const SimpleDigraph& d, std::size_t cap) {
        std::vector<std::vector<int>> out;
        for (auto& f : enumerate_dispositions(d, cap)) out.push_back(std::move(f.mapping));
        return out;
    }, py::arg("d"), py::arg("cap") = kDefaultDispositionCap);
    m.def("staircase_counter", [](int n) { return to_py(staircase_counter(n)); });

    m.def("companion", [](const SimpleDigraph& d, int v, bool dual) {
        return to_py(companion_from_counters(d, v, dual).poly);
    }, py::arg("d"), py::arg("v"), py::arg("dual") = false);
    m.def("companion_by_recurrence", [](const SimpleDigraph& d, int v) { return to_py(companion_by_recurrence(d, v)); });
    m.def("companion_dual", [](const SimpleDigraph& d, int v) { return to_py(companion_dual(d, v)); });
    m.def("two_row_companion", [](int n1, int n2, int r) { return to_py(two_row_companion(n1, n2, r)); });
    m.def("staircase_f", [](int n, int i) { return to_py(staircase_f(n, i)); });
    m.def("laguerre", [](int n) { return to_py(laguerre(n)); });

    m.def("laguerrean", [](const py::iterable& p) { return to_py(laguerrean(poly_from_py(p))); });
    m.def("laguerrean_flipped", [](const py::iterable& p) { return to_py(laguerrean_flipped(poly_from_py(p))); });
    m.def("two_row_ode", [](int n1, int n2, int r) { return to_py(two_row_ode(n1, n2, r)); });
    m.def("catalan_ode", [](int n, int r) { return to_py(catalan_ode(n, r)); }, py::arg("n"), py::arg("r") = 2);
    m.def("verify_ode", [](const py::tuple& e, const py::iterable& p) { return verify_ode(ode_from_py(e), poly_from_py(p)); });
    m.def("same_equation", [](const py::tuple& a, const py::tuple& b) { return same_equation(ode_from_py(a), ode_from_py(b)); });
    m.def("pretty", [](const py::iterable& p) { return to_pretty(poly_from_py(p)); });
    m.def("pretty_ode", [](const py::tuple& e) { return to_pretty(ode_from_py(e)); });

    m.def("catalan_polynomial", [](int n, int r) { return to_py(catalan_polynomial(n, r)); }, py::arg("n"), py::arg("r") = 2);
    m.def("laguerre_inner", [](const py::iterable& p, const py::iterable& q) {
        return to_py(laguerre_inner(poly_from_py(p), poly_from_py(q)));
    });
    m.def("gram", [](const std::vector<py::iterable>& polys, bool flip) {
        std::vector<Polynomial> ps;
        for (const auto& p : polys) ps.push_back(poly_from_py(p));
        py::list rows;
        for (const auto& r : gram(ps, flip).entries) {
            py::list row;
            for (const auto& x : r) row.append(to_py(x));
            rows.append(row);
        }
        return rows;
    }, py::arg("polys"), py::arg("flip") = false);

    m.def("nonstrict_count", [](const SimpleDigraph& d, int i) { return to_py(nonstrict_count(d, i)); });
    m.def("nonstrict_bruteforce", [](const SimpleDigraph& d, int i) { return to_py(nonstrict_bruteforce(d, i)); });

    m.def("max_counter_search", [](int order, unsigned threads) {
        SearchReport r;
        {
            py::gil_scoped_release release;
            r = max_counter_search(order, threads);
        }
        py::dict d;
        d["order"] = r.order;
        d["max_counter"] = to_py(r.max_counter);
        d["total_enumerated"] = r.total_enumerated;
        d["argmax_are_staircases"] = r.argmax_are_staircases;
        py::list specs;
        for (const auto& s : r.argmax_specs) specs.append(family_name(DispositionalFamily{s}));
        d["argmax"] = specs;
        return d;
    }, py::arg("order"), py::arg("threads") = 1);
}
