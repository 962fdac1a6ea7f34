#include "qtwist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "qtwist/expr.hpp"
#include "qtwist/verify.hpp"

namespace qtwist::cli {

namespace {

using nlohmann::json;

json mono_json(const PBWMono& m) {
    json arr = json::array();
    for (const GenId& id : m.factors()) arr.push_back(id.to_string());
    return arr;
}

json uelt_json(const UElt& x) {
    json arr = json::array();
    for (const auto& [mono, c] : x.terms())
        arr.push_back({{"coeff", c.to_string()}, {"monomial", mono_json(mono)}});
    return arr;
}

json tensor_json(const Tensor2& t) {
    json arr = json::array();
    for (const auto& [key, c] : t.terms()) {
        json legs = json::array();
        legs.push_back(mono_json(key[0]));
        legs.push_back(mono_json(key[1]));
        arr.push_back({{"coeff", c.to_string()}, {"tensor", legs}});
    }
    return arr;
}

json useries_json(const USeries& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(uelt_json(s[i]));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

json t2series_json(const T2Series& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(tensor_json(s[i]));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

struct ContextFlags {
    std::string case_name;
    std::string n_text;
    std::string x_text;
    int order = 4;

    void attach(CLI::App* cmd, bool required) {
        auto* c = cmd->add_option("--case", case_name, "deformation case: g|e|d|h|f|df");
        auto* n = cmd->add_option("--n", n_text, "ladder degree, e.g. 1,1");
        cmd->add_option("--x", x_text, "rationals x1,x2 with x1*n1 + x2*n2 = 1");
        cmd->add_option("--order", order, "truncation order (default 4)");
        if (required) {
            c->required();
            n->required();
        }
    }

    TwistContext make() const {
        std::string spec = "case=" + case_name + " n=" + n_text;
        if (!x_text.empty()) spec += " x=" + x_text;
        spec += " order=" + std::to_string(order);
        return TwistContext::parse(spec);
    }
};

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Hopf-deformation calculator for the double-loop sl2 algebra"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text|json")->capture_default_str();

    // bracket
    auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
    std::string arg_a, arg_b;
    cmd_bracket->add_option("lhs", arg_a, "left operand")->required();
    cmd_bracket->add_option("rhs", arg_b, "right operand")->required();

    // nf
    auto* cmd_nf = app.add_subcommand("nf", "normal form of an expression");
    std::string arg_expr;
    cmd_nf->add_option("expr", arg_expr, "expression")->required();

    // delta / antipode
    auto* cmd_delta = app.add_subcommand("delta", "deformed coproduct of an expression");
    std::string delta_expr;
    ContextFlags delta_ctx;
    cmd_delta->add_option("expr", delta_expr, "expression")->required();
    delta_ctx.attach(cmd_delta, true);

    auto* cmd_antipode = app.add_subcommand("antipode", "deformed antipode of an expression");
    std::string antipode_expr;
    ContextFlags antipode_ctx;
    cmd_antipode->add_option("expr", antipode_expr, "expression")->required();
    antipode_ctx.attach(cmd_antipode, true);

    // twist
    auto* cmd_twist = app.add_subcommand("twist", "the twisting element of a context");
    ContextFlags twist_ctx;
    twist_ctx.attach(cmd_twist, true);
    std::string twist_c = "0";
    bool twist_inverse = false;
    cmd_twist->add_option("--c", twist_c, "family shift (rational, default 0)");
    cmd_twist->add_flag("--inverse", twist_inverse, "emit the inverse element");

    // check
    auto* cmd_check = app.add_subcommand("check", "run verification suites");
    std::string suite = "all";
    int check_order = 3;
    std::uint64_t seed = 12345;
    cmd_check->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
    cmd_check->add_option("--order", check_order, "truncation order")->capture_default_str();
    cmd_check->add_option("--seed", seed, "grid seed")->capture_default_str();
    bool list_suites = false;
    cmd_check->add_flag("--list", list_suites, "list suite names and exit");

    std::vector<const char*> argv;
    argv.push_back("qtwist");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const bool as_json = format == "json";
    if (!as_json && format != "text") {
        err << "unknown format: " << format << "\n";
        return 2;
    }

    if (cmd_bracket->parsed()) {
        auto lhs = as_lie(eval_expr(arg_a));
        auto rhs = as_lie(eval_expr(arg_b));
        if (!lhs || !rhs) {
            err << "bracket operands must be Lie-algebra elements\n";
            return 2;
        }
        UElt result = UElt::from_lie(bracket_lin(*lhs, *rhs));
        out << (as_json ? json{{"result", uelt_json(result)}}.dump() : result.to_string())
            << "\n";
        return 0;
    }

    if (cmd_nf->parsed()) {
        UElt result = eval_expr(arg_expr);
        out << (as_json ? json{{"result", uelt_json(result)}}.dump() : result.to_string())
            << "\n";
        return 0;
    }

    if (cmd_delta->parsed()) {
        TwistContext ctx = delta_ctx.make();
        T2Series result = twisted_delta(ctx, eval_expr(delta_expr));
        out << (as_json ? json{{"result", t2series_json(result)}}.dump() : result.to_string())
            << "\n";
        return 0;
    }

    if (cmd_antipode->parsed()) {
        TwistContext ctx = antipode_ctx.make();
        USeries result = twisted_antipode(ctx, eval_expr(antipode_expr));
        out << (as_json ? json{{"result", useries_json(result)}}.dump() : result.to_string())
            << "\n";
        return 0;
    }

    if (cmd_twist->parsed()) {
        TwistContext ctx = twist_ctx.make();
        Rational c = parse_rational(twist_c);
        T2Series result = twist_inverse ? inverse_twist_element(ctx, c) : twist_element(ctx, c);
        out << (as_json ? json{{"result", t2series_json(result)}}.dump() : result.to_string())
            << "\n";
        return 0;
    }

    if (cmd_check->parsed()) {
        if (list_suites) {
            for (const std::string& name : suite_names()) out << name << "\n";
            return 0;
        }
        GridParams params;
        params.order = check_order;
        params.seed = seed;
        std::vector<CheckResult> results;
        int failed = 0, discrepancies = 0, passed = 0;
        if (suite == "all") {
            Summary summary = run_all(params);
            results = std::move(summary.results);
            failed = summary.failed;
            discrepancies = summary.discrepancies;
            passed = summary.passed;
        } else {
            results = run_suite(suite, params);
            for (const CheckResult& r : results) {
                if (r.verdict == Verdict::Fail) ++failed;
                else if (r.verdict == Verdict::PaperDiscrepancy) ++discrepancies;
                else ++passed;
            }
        }
        if (as_json) {
            for (const CheckResult& r : results) out << r.to_json() << "\n";
        } else {
            write_table(out, results);
        }
        (void)passed;
        (void)discrepancies;
        return failed == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qtwist::cli
