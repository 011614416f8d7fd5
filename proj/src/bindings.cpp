#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koszul/linfty.hpp"
#include "koszul/runner.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

// shared_ptr<const Chart> cannot be a pybind11 holder; a value wrapper can.
struct ChartHandle {
    ChartPtr ptr;
};

GradedPoly scale(const GradedPoly& p, long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return p * (Rational(num) / Rational(den));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact engine for N-graded polynomial algebras and derived "
        "L-infinity brackets on shifted cotangent charts.";

    py::register_exception<MasterEquationError>(m, "MasterEquationError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<ChartHandle>(m, "Chart")
        .def_static(
            "make",
            [](const std::vector<std::pair<std::string, int>>& coords) {
                std::vector<Coordinate> cs;
                cs.reserve(coords.size());
                for (const auto& [n, d] : coords) cs.push_back({n, d});
                return ChartHandle{Chart::make(cs)};
            },
            py::arg("coords"),
            "Plain chart from (name, degree) pairs.")
        .def_static(
            "shifted_cotangent",
            [](const std::vector<std::pair<std::string, int>>& base, int n) {
                std::vector<Coordinate> cs;
                cs.reserve(base.size());
                for (const auto& [nm, d] : base) cs.push_back({nm, d});
                return ChartHandle{Chart::shifted_cotangent(cs, n)};
            },
            py::arg("base"), py::arg("shift"),
            "T*[n] chart: base coordinates plus momenta p(name) of degree "
            "n - |name|.")
        .def("__len__",
             [](const ChartHandle& c) { return c.ptr->size(); })
        .def_property_readonly(
            "names",
            [](const ChartHandle& c) {
                std::vector<std::string> out;
                for (int i = 0; i < c.ptr->size(); ++i)
                    out.push_back(c.ptr->name(i));
                return out;
            })
        .def_property_readonly(
            "is_cotangent",
            [](const ChartHandle& c) { return c.ptr->is_cotangent(); })
        .def_property_readonly(
            "shift", [](const ChartHandle& c) { return c.ptr->shift(); })
        .def("degree",
             [](const ChartHandle& c, const std::string& name) {
                 const int o = c.ptr->ordinal(name);
                 if (o < 0)
                     throw std::invalid_argument("unknown coordinate '" +
                                                 name + "'");
                 return c.ptr->degree(o);
             },
             py::arg("name"))
        .def("__repr__", [](const ChartHandle& c) {
            std::string out = "Chart(";
            for (int i = 0; i < c.ptr->size(); ++i) {
                if (i) out += " ";
                out += c.ptr->name(i) + ":" +
                       std::to_string(c.ptr->degree(i));
            }
            return out + ")";
        });

    py::class_<GradedPoly>(m, "Poly")
        .def("__add__", [](const GradedPoly& a,
                           const GradedPoly& b) { return a + b; })
        .def("__sub__", [](const GradedPoly& a,
                           const GradedPoly& b) { return a - b; })
        .def("__neg__", [](const GradedPoly& a) { return -a; })
        .def("__mul__", [](const GradedPoly& a,
                           const GradedPoly& b) { return a * b; })
        .def("__mul__", [](const GradedPoly& a,
                           long long c) { return a * Rational(c); })
        .def("__rmul__", [](const GradedPoly& a,
                            long long c) { return a * Rational(c); })
        .def("__eq__", [](const GradedPoly& a,
                          const GradedPoly& b) { return a == b; })
        .def("scale", &scale, py::arg("num"), py::arg("den") = 1)
        .def_property_readonly("is_zero", &GradedPoly::is_zero)
        .def_property_readonly("is_base", &GradedPoly::is_base)
        .def_property_readonly(
            "degree",
            [](const GradedPoly& p) -> py::object {
                auto d = p.degree();
                return d ? py::cast(*d) : py::none();
            })
        .def_property_readonly(
            "momentum_multidegree",
            [](const GradedPoly& p) { return p.momentum_multidegree(); })
        .def("render", &GradedPoly::render)
        .def("__repr__", &GradedPoly::render);

    m.def("poly",
          [](const ChartHandle& ch, const std::string& text) {
              return parse_poly(ch.ptr, text);
          },
          py::arg("chart"), py::arg("text"),
          "Parse a polynomial expression over the chart.");
    m.def("coordinate",
          [](const ChartHandle& ch, const std::string& name) {
              return GradedPoly::coordinate(ch.ptr, name);
          },
          py::arg("chart"), py::arg("name"));
    m.def("constant",
          [](const ChartHandle& ch, long long num, long long den) {
              if (den == 0) throw std::invalid_argument("zero denominator");
              return GradedPoly::constant(ch.ptr,
                                          Rational(num) / Rational(den));
          },
          py::arg("chart"), py::arg("num"), py::arg("den") = 1);

    m.def("bracket",
          [](const GradedPoly& f, const GradedPoly& g) {
              return canonical_bracket(f, g);
          },
          py::arg("f"), py::arg("g"),
          "Canonical Poisson bracket of degree -n.");
    m.def("partial",
          [](const GradedPoly& f, const std::string& name) {
              return partial_derivative(f, name);
          },
          py::arg("f"), py::arg("coordinate"), "Left partial derivative.");
    m.def("zero_section",
          [](const GradedPoly& f) { return zero_section_pullback(f); },
          py::arg("f"), "Pullback along the zero section (kill momenta).");
    m.def("schouten",
          [](const GradedPoly& a, const GradedPoly& b) {
              return schouten_bracket(a, b);
          },
          py::arg("P"), py::arg("R"),
          "Schouten bracket of multivectors (momentum polynomials).");
    m.def("decalage_sign", &decalage_sign, py::arg("v_degrees"));

    py::class_<ExtendedElement>(m, "Extended")
        .def_static("make",
                    [](const GradedPoly& base, const GradedPoly& ambient) {
                        return ExtendedElement::make(base, ambient);
                    },
                    py::arg("base"), py::arg("ambient"))
        .def_readonly("base", &ExtendedElement::base)
        .def_readonly("ambient", &ExtendedElement::ambient);

    py::class_<LinftyStructure>(m, "Linfty")
        .def_static(
            "build",
            [](const GradedPoly& theta) {
                return LinftyStructure::build(theta);
            },
            py::arg("theta"),
            "Validate the master equation and derive the bracket tower.")
        .def_property_readonly("theta", &LinftyStructure::theta)
        .def_property_readonly("curvature", &LinftyStructure::curvature)
        .def_property_readonly("is_strict", &LinftyStructure::is_strict)
        .def_property_readonly("arity_bound", &LinftyStructure::arity_bound)
        .def("bracket",
             [](const LinftyStructure& S, const std::vector<GradedPoly>& a) {
                 return linfty_bracket(S, a);
             },
             py::arg("args"), "l^k on base homogeneous arguments.")
        .def("nested",
             [](const LinftyStructure& S, const std::vector<GradedPoly>& a) {
                 return nested_bracket(S, a);
             },
             py::arg("args"), "0*{...{theta, a_1}..., a_k} (no prefactor).")
        .def("identity_residual",
             [](const LinftyStructure& S, const std::vector<GradedPoly>& a,
                int cap) { return linfty_identity_residual(S, a, cap); },
             py::arg("elements"), py::arg("arity_cap") = 4)
        .def("mc_residual",
             [](const LinftyStructure& S, const GradedPoly& f) {
                 return mc_residual(S, f);
             },
             py::arg("f"))
        .def("mc_formal_residual",
             [](const LinftyStructure& S, std::vector<GradedPoly> coeffs,
                int order) {
                 return mc_formal_residual(S, FormalElement{std::move(coeffs)},
                                           order);
             },
             py::arg("coefficients"), py::arg("order"))
        .def("exp_flow",
             [](const LinftyStructure& S, const GradedPoly& f,
                const GradedPoly& g) { return exp_flow(S, f, g); },
             py::arg("f"), py::arg("g"))
        .def("gauge_rhs",
             [](const LinftyStructure& S, const GradedPoly& f,
                const GradedPoly& lam) { return gauge_rhs(S, f, lam); },
             py::arg("f"), py::arg("lam"))
        .def("kuranishi",
             [](const LinftyStructure& S, const GradedPoly& f) {
                 return kuranishi(S, f);
             },
             py::arg("f"))
        .def("extended_brackets",
             [](const LinftyStructure& S, int arity,
                const std::vector<ExtendedElement>& args) {
                 ExtendedElement r = extended_brackets(S, arity, args);
                 return py::make_tuple(r.base, r.ambient);
             },
             py::arg("arity"), py::arg("args"),
             "Returns (base part, ambient part).")
        .def("extended_residual",
             [](const LinftyStructure& S, const GradedPoly& f,
                const GradedPoly& theta_t) {
                 auto [amb, base] = mc_extended_residual(S, f, theta_t);
                 return py::make_tuple(amb, base);
             },
             py::arg("f"), py::arg("theta_t"),
             "Returns (ambient residual, base residual).");

    m.def("run_scenario_text",
          [](const std::string& text, int arity_cap) {
              Scenario sc = parse_scenario(text, "<string>");
              RunOptions opt;
              opt.arity_cap = arity_cap;
              return render_structured(run_scenario(sc, opt));
          },
          py::arg("text"), py::arg("arity_cap") = 4,
          "Run a scenario given as text; returns the structured report "
          "(JSON).");
    m.def("run_scenario_file",
          [](const std::string& path, int arity_cap) {
              Scenario sc = load_scenario(path);
              RunOptions opt;
              opt.arity_cap = arity_cap;
              return render_structured(run_scenario(sc, opt));
          },
          py::arg("path"), py::arg("arity_cap") = 4,
          "Run a scenario file; returns the structured report (JSON).");
    m.def("version", [] { return std::string(kVersion); });
}
