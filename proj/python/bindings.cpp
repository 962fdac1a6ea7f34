#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtwist/expr.hpp"
#include "qtwist/verify.hpp"

namespace py = pybind11;
using namespace qtwist;

namespace {

py::dict result_dict(const CheckResult& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["item"] = r.item;
    d["verdict"] = verdict_name(r.verdict);
    d["detail"] = r.detail;
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

GenId parse_generator(const std::string& text) {
    UElt x = eval_expr(text);
    if (x.terms().size() == 1 && x.terms().begin()->first.size() == 1 &&
        x.terms().begin()->second.is_one())
        return x.terms().begin()->first.factors()[0];
    throw std::invalid_argument("expected a single generator, got: " + text);
}

}  // namespace

PYBIND11_MODULE(qtwist, m) {
    m.doc() = "exact Hopf-deformation calculator for the double-loop sl2 algebra";

    m.def("nf", [](const std::string& expr) { return eval_expr(expr).to_string(); },
          py::arg("expr"), "PBW normal form of an expression, canonically rendered");

    m.def(
        "bracket",
        [](const std::string& lhs, const std::string& rhs) {
            auto a = as_lie(eval_expr(lhs));
            auto b = as_lie(eval_expr(rhs));
            if (!a || !b)
                throw std::invalid_argument("bracket operands must be Lie-algebra elements");
            return UElt::from_lie(bracket_lin(*a, *b)).to_string();
        },
        py::arg("lhs"), py::arg("rhs"), "Lie bracket of two elements");

    py::class_<TwistContext>(m, "Context",
                             "one of the six deformation contexts, e.g. "
                             "Context('case=e n=0,1 x=0,1 order=2')")
        .def(py::init([](const std::string& spec) { return TwistContext::parse(spec); }),
             py::arg("spec"))
        .def("__repr__", [](const TwistContext& c) { return "Context('" + c.to_string() + "')"; })
        .def_property_readonly("order", &TwistContext::order)
        .def("delta",
             [](const TwistContext& ctx, const std::string& expr) {
                 return twisted_delta(ctx, eval_expr(expr)).to_string();
             },
             py::arg("expr"), "deformed coproduct by twist conjugation")
        .def("antipode",
             [](const TwistContext& ctx, const std::string& expr) {
                 return twisted_antipode(ctx, eval_expr(expr)).to_string();
             },
             py::arg("expr"), "deformed antipode by twist conjugation")
        .def("twist",
             [](const TwistContext& ctx, const std::string& c, bool inverse) {
                 Rational cc = parse_rational(c);
                 return (inverse ? inverse_twist_element(ctx, cc) : twist_element(ctx, cc))
                     .to_string();
             },
             py::arg("c") = "0", py::arg("inverse") = false, "the twisting element")
        .def("stated_delta",
             [](const TwistContext& ctx, const std::string& gen) {
                 return cf_delta(ctx, parse_generator(gen)).to_string();
             },
             py::arg("generator"), "the stated closed-form coproduct")
        .def("stated_antipode",
             [](const TwistContext& ctx, const std::string& gen) {
                 return cf_antipode(ctx, parse_generator(gen)).to_string();
             },
             py::arg("generator"), "the stated closed-form antipode")
        .def("compare",
             [](const TwistContext& ctx, const std::string& gen) {
                 TwistEngine eng(ctx);
                 py::list out;
                 for (const CompareReport& rep : compare(eng, parse_generator(gen)))
                     out.append(rep.to_json());
                 return out;
             },
             py::arg("generator"),
             "closed form vs conjugation oracle; one JSON report per map");

    m.def("suites", [] { return suite_names(); }, "names of the verification suites");

    m.def(
        "run_suite",
        [](const std::string& name, int order) {
            GridParams params;
            params.order = order;
            py::list out;
            for (const CheckResult& r : run_suite(name, params)) out.append(result_dict(r));
            return out;
        },
        py::arg("name"), py::arg("order") = 3, "run one verification suite");

    m.def(
        "run_all",
        [](int order) {
            GridParams params;
            params.order = order;
            Summary summary = run_all(params);
            py::list out;
            for (const CheckResult& r : summary.results) out.append(result_dict(r));
            return out;
        },
        py::arg("order") = 3, "run every verification suite");
}
